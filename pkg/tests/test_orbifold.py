import pytest

from fmcurve import group as G
from fmcurve import orbifold as O


@pytest.mark.parametrize("j, genus, cones", [
    (G.TRIVIAL, 49, 0),
    (G.K, 7, 0),
    (G.preimage(G.K, [3]), 3, 4),
    (G.preimage(G.K, [2, 3]), 1, 6),
    (G.WHOLE, 0, 7),
])
def test_quotient_signatures(j, genus, cones):
    sig = O.quotient_genus_and_cones(j)
    assert sig.genus == genus
    assert sig.cone_orders == (2,) * cones


def test_euler_characteristic():
    for j in (G.TRIVIAL, G.K, G.WHOLE, G.KSTAR):
        assert O.quotient_genus_and_cones(j).euler() * j.order == -96


def test_every_chain_is_consistent():
    subs = G.all_subgroups()[:200]
    assert all(O.chain_consistent(a, G.WHOLE) for a in subs)


def test_fixed_points():
    assert [O.fixed_point_count(r, G.K) for r in range(1, 8)] == [4] * 7
    with pytest.raises(ValueError):
        O.fixed_point_count(1, G.preimage(G.K, [1]))


def test_rotation_signature():
    assert O.rotation_quotient_signature() == O.OrbSignature(0, (2, 7, 7))


def test_dichotomy():
    assert O.z2cubed_quotient_candidates() == [(0, 7), (1, 3)]
    assert O.admits_order7_symmetry(0, 7)
    assert not O.admits_order7_symmetry(1, 3)
