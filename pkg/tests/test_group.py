import time

import pytest

from fmcurve import group as G


def test_canonical_masks():
    assert G.elem(1, 2, 3, 4, 5, 6, 7) == 0
    assert G.elem(7) == G.elem(1, 2, 3, 4, 5, 6)
    assert G.WHOLE.order == 64 and G.TRIVIAL.order == 1
    with pytest.raises(G.GroupError):
        G.elem(8)


def test_subgroup_validation():
    with pytest.raises(G.GroupError):
        G.Subgroup((0, G.elem(1), G.elem(2)))


def test_subgroup_count_and_runtime():
    t = time.perf_counter()
    subs = G.all_subgroups()
    assert len(subs) == 2825
    assert time.perf_counter() - t < 5
    # Gaussian binomials for F_2^6: 1, 63, 651, 1395, 651, 63, 1
    by_order = {}
    for h in subs:
        by_order[h.order] = by_order.get(h.order, 0) + 1
    assert by_order == {1: 1, 2: 63, 4: 651, 8: 1395, 16: 651, 32: 63, 64: 1}


def test_lambda_invariant_subgroups():
    found = {G.name_of(h) for h in G.invariant_subgroups(G.LAMBDA)}
    assert found == {"1", "K", "K*", "H"}
    assert G.invariant_subgroups(G.LAMBDA) == G.invariant_subgroups_by_orbits(G.LAMBDA)


def test_zeta_swaps_k_and_kstar():
    assert G.ZETA_AUT.image(G.K) == G.KSTAR
    assert len(G.generated_aut_group([G.LAMBDA, G.ZETA_AUT])) == 14


def test_lemma_cases():
    assert all(r["ok"] for r in G.lemma_replay())
    assert G.uncovered_orbits() == ["a1a2a5", "a1a3a5"]


def test_free_action():
    assert G.acts_freely(G.K) and G.acts_freely(G.KSTAR)
    assert not G.acts_freely(G.preimage(G.K, [1]))


def test_quotient_relations():
    assert G.quotient_relations(G.K) == {4: (1, 2), 5: (2, 3), 6: (1, 2, 3), 7: (1, 3)}
    assert G.quotient_relations(G.KSTAR) == {4: (1, 3), 5: (1, 2, 3), 6: (1, 2), 7: (2, 3)}


@pytest.mark.parametrize("k, lines", [
    (G.K, [(1, 2, 4), (1, 3, 7), (1, 5, 6), (2, 3, 5), (2, 6, 7), (3, 4, 6), (4, 5, 7)]),
    (G.KSTAR, [(1, 2, 6), (1, 3, 4), (1, 5, 7), (2, 3, 7), (2, 4, 5), (3, 5, 6), (4, 6, 7)]),
])
def test_fano_lines(k, lines):
    assert G.fano_lines(k) == lines


def test_conjugation_action():
    assert G.conjugation_action((7, 1, 2, 3, 4, 5, 6)) == G.LAMBDA
    assert G.conjugation_action((2, 1, 7, 6, 5, 4, 3)) == G.ZETA_AUT
