import random
from fractions import Fraction

import pytest

from fmcurve import elliptic as E
from fmcurve.field import CycloElem
from fmcurve.moebius import INF, BranchSet, DegenerateError, MoebiusMap, roots_of_unity


def test_j_of_lambda():
    assert E.j_from_lambda(CycloElem.coerce(-1)) == CycloElem.coerce(1728)
    assert E.j_from_lambda(CycloElem.coerce(2)) == CycloElem.coerce(1728)


def test_j_is_independent_of_order():
    e1 = E.EllipticModel.from_branch([INF, 0, 1, 5])
    e2 = E.EllipticModel.from_branch([5, 1, INF, 0])
    assert E.j_invariant(e1) == E.j_invariant(e2)


def test_moebius_invariance():
    pts = [0, 1, 3, 7]
    g = MoebiusMap(2, 1, 1, 5)
    assert E.isomorphic(E.EllipticModel.from_branch(pts), E.EllipticModel.from_branch([g(p) for p in pts]))


def test_branch_count_validation():
    with pytest.raises(DegenerateError):
        E.EllipticModel((1, 2))
    with pytest.raises(DegenerateError):
        E.EllipticModel.from_branch([0, 1, 2])


def test_t_curves(m0, fixture_mu):
    js = {E.j_invariant(c) for c in E.t_curves(m0)}
    assert js == {CycloElem.coerce(1792)}
    fixture_js = [E.j_invariant(c) for c in E.t_curves(fixture_mu)]
    # the fixture is an arithmetic progression, so several factors coincide
    assert len(set(fixture_js)) == 5


def test_e_curves():
    js = {k: E.j_invariant(c) for k, c in E.e_curves_mu0().items()}
    assert js["E2"] == js["E3"] == CycloElem.coerce(1792)
    assert js["E"] == js["E1"] != js["E3"]
    assert js["E4"] == js["E5"]
    assert js["E6"] == CycloElem.coerce(12544)


def test_thirty_five_factors_on_roots_of_unity():
    counts = E.thirty_five_factors(roots_of_unity())
    assert sorted(counts.values()) == [7, 7, 7, 14]


def test_thirty_five_factors_generic():
    r = random.Random(7)
    pts = set()
    while len(pts) < 7:
        pts.add(Fraction(r.randint(-40, 40), r.randint(1, 9)))
    counts = E.thirty_five_factors(BranchSet(pts))
    assert sum(counts.values()) == 35 and len(counts) >= 30
