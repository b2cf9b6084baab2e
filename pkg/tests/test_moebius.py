import itertools
import random

import pytest

from fmcurve.field import random_elem, rho
from fmcurve.moebius import (A_MAP, INF, BranchSet, DegenerateError, MoebiusMap, P1Point, branch_sets_equivalent,
                             cross_ratio, pt, roots_of_unity, rotation, three_point_map)


def test_three_point_map_postcondition():
    r = random.Random(5)
    for _ in range(100):
        p, q, s = (random_elem(r) for _ in range(3))
        if len({p, q, s}) < 3:
            continue
        m = three_point_map(p, q, s)
        assert m(p) == INF and m(q) == pt(0) and m(s) == pt(1)


def test_three_point_map_with_infinity():
    for triple in itertools.permutations([INF, pt(0), pt(1)]):
        m = three_point_map(*triple)
        assert [m(x) for x in triple] == [INF, pt(0), pt(1)]


def test_degenerate():
    with pytest.raises(DegenerateError):
        three_point_map(1, 1, 2)
    with pytest.raises(DegenerateError):
        MoebiusMap(1, 2, 2, 4)
    with pytest.raises(DegenerateError):
        cross_ratio(0, 1, 2, 2)


def test_composition_and_inverse():
    m = MoebiusMap(1, 2, 3, 5)
    n = MoebiusMap(rho(1), 1, 0, 1)
    x = pt(rho(3) + 2)
    assert (m @ n)(x) == m(n(x))
    assert m.inverse() @ m == MoebiusMap.identity()
    assert MoebiusMap(2, 4, 6, 10) == m


def test_cross_ratio_invariance():
    g = MoebiusMap(2, 1, 1, 3)
    pts = [pt(2), pt(5), pt(rho(2)), pt(-3)]
    assert cross_ratio(*pts) == cross_ratio(*(g(p) for p in pts))


def test_a_map_and_rotation():
    assert A_MAP(rho(0)) == INF and A_MAP(rho(1)) == pt(0) and A_MAP(rho(2)) == pt(1)
    assert rotation().order() == 7
    assert roots_of_unity().image(rotation()) == roots_of_unity()
    assert rotation().fixed_points() == [pt(0), INF]


def test_branch_set_validation():
    with pytest.raises(DegenerateError):
        BranchSet([0, 1, 2, 3, 4, 5, 5])
    with pytest.raises(DegenerateError):
        BranchSet([0, 1, 2])


def test_branch_sets_equivalent():
    s = BranchSet([INF, 0, 1, 2, 3, 4, 5])
    g = MoebiusMap(1, 1, 1, 2)
    m = branch_sets_equivalent(s, s.image(g))
    assert m is not None and s.image(m) == s.image(g)
    assert branch_sets_equivalent(s, BranchSet([INF, 0, 1, 2, 3, 4, 7])) is None


def test_json_roundtrip():
    for p in (INF, pt(rho(3))):
        assert P1Point.from_json(p.to_json()) == p
