"""The parameter domain, the S_7 action on it, and the special point mu0."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from fmcurve.field import ONE, ZERO, CycloElem, rho
from fmcurve.moebius import A_MAP, MoebiusMap, branch_sets_equivalent, three_point_map
from fmcurve.omega import ModuliPoint

Perm = tuple[int, ...]  # perm[k-1] = new label of old branch label k


def act_A(mu: ModuliPoint) -> ModuliPoint:
    return ModuliPoint(*(1 / v for v in mu.values))


def act_B(mu: ModuliPoint) -> ModuliPoint:
    m4, m5, m6, m7 = mu.values
    return ModuliPoint(m7 / (m7 - 1), m7 / (m7 - m4), m7 / (m7 - m5), m7 / (m7 - m6))


def act_sigma(sigma: dict[int, int], mu: ModuliPoint) -> ModuliPoint:
    """Coordinate permutation: new mu_j = mu_{sigma(j)} for j = 4..7."""
    if sorted(sigma) != [4, 5, 6, 7] or sorted(sigma.values()) != [4, 5, 6, 7]:
        raise ValueError("sigma must permute {4, 5, 6, 7}")
    return ModuliPoint(*(mu.values[sigma[j] - 4] for j in range(4, 8)))


def sigma_perm(sigma: dict[int, int]) -> Perm:
    """Branch-label permutation of act_sigma: old label sigma(j) becomes label j."""
    p = [1, 2, 3, 0, 0, 0, 0]
    for j, s in sigma.items():
        p[s - 1] = j
    return tuple(p)


def act_perm(perm: Perm, mu: ModuliPoint) -> ModuliPoint:
    """Relabel the seven branch points and renormalize labels 1, 2, 3 to oo, 0, 1."""
    inv = {perm[k]: k + 1 for k in range(7)}
    pts = mu.branch_points()
    m = three_point_map(pts[inv[1] - 1], pts[inv[2] - 1], pts[inv[3] - 1])
    return ModuliPoint(*(m(pts[inv[j] - 1]).value for j in range(4, 8)))


def induced_perm(m: MoebiusMap, mu: ModuliPoint, image: ModuliPoint) -> Optional[Perm]:
    """The label permutation realized by m when it carries mu's branch points to image's."""
    target = {p: k for k, p in enumerate(image.branch_points(), 1)}
    try:
        return tuple(target[m(p)] for p in mu.branch_points())
    except KeyError:
        return None


# label permutations of the two generators
A_PERM: Perm = (2, 1, 3, 4, 5, 6, 7)
B_PERM: Perm = (2, 3, 4, 5, 6, 7, 1)


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[q[k] - 1] for k in range(7))


def invert(p: Perm) -> Perm:
    out = [0] * 7
    for k, v in enumerate(p, 1):
        out[v - 1] = k
    return tuple(out)


def is_transposition(p: Perm) -> bool:
    return sum(1 for k, v in enumerate(p, 1) if k != v) == 2


def cycle_type(p: Perm) -> list[int]:
    seen, out = set(), []
    for k in range(1, 8):
        if k in seen:
            continue
        n, j = 0, k
        while j not in seen:
            seen.add(j)
            j = p[j - 1]
            n += 1
        out.append(n)
    return sorted(out)


@lru_cache(maxsize=None)
def group_words() -> dict[Perm, str]:
    """Breadth-first closure of {A, B}: each permutation with a shortest word.

    Words are read left to right as successive actions ("AB" = A, then B).
    """
    words = {tuple(range(1, 8)): ""}
    frontier = [tuple(range(1, 8))]
    while frontier:
        nxt = []
        for p in frontier:
            for letter, g in (("A", A_PERM), ("B", B_PERM)):
                q = compose(g, p)
                if q not in words:
                    words[q] = words[p] + letter
                    nxt.append(q)
        frontier = nxt
    return words


def group_order() -> int:
    return len(group_words())


def apply_word(word: str, mu: ModuliPoint) -> ModuliPoint:
    for letter in word:
        mu = act_A(mu) if letter == "A" else act_B(mu)
    return mu


def word_perm(word: str) -> Perm:
    p = tuple(range(1, 8))
    for letter in word:
        p = compose(A_PERM if letter == "A" else B_PERM, p)
    return p


@dataclass
class Equivalence:
    word: str
    perm: Perm


def equivalent(mu: ModuliPoint, other: ModuliPoint) -> Optional[Equivalence]:
    """Search the 5040-element orbit of mu for ``other``.

    The renormalizing map depends only on which old labels land on 1, 2, 3,
    so it is computed once per ordered triple and shared by the 24
    permutations with that triple.
    """
    pts = mu.branch_points()
    target = other.values
    images: dict[tuple[int, int, int], list] = {}
    for perm, word in group_words().items():
        inv = invert(perm)
        key = (inv[0], inv[1], inv[2])
        if key not in images:
            m = three_point_map(*(pts[k - 1] for k in key))
            images[key] = [m(p) for p in pts]
        img = images[key]
        if all(img[inv[j - 1] - 1].value == target[j - 4] for j in range(4, 8)):
            return Equivalence(word, perm)
    return None


def equivalent_by_branch_sets(mu: ModuliPoint, other: ModuliPoint) -> Optional[MoebiusMap]:
    return branch_sets_equivalent(mu.branch_set(), other.branch_set())


def a_of_rho(k: int) -> CycloElem:
    return A_MAP(rho(k)).value


def mu0() -> ModuliPoint:
    return ModuliPoint(*(a_of_rho(k) for k in (3, 4, 5, 6)))


def mu0_closed_form() -> ModuliPoint:
    """(1+z)(z^k - 1)/(z^(k+1) - 1) for k = 2..5."""
    z = rho
    return ModuliPoint(*((1 + z(1)) * (z(k) - 1) / (z(k + 1) - 1) for k in (2, 3, 4, 5)))


def dual_mu(mu: ModuliPoint) -> ModuliPoint:
    m4, m5, m6, m7 = mu.values
    return ModuliPoint(m6 / m5, m7 / m5, m4 / m5, 1 / m5)


def _sextic(sq: CycloElem, linear: int) -> CycloElem:
    return sq * sq * sq - 5 * sq * sq + linear * sq - 1


def zeta_condition(mu: ModuliPoint) -> bool:
    """mu6 = mu5^2/mu4, mu7 = mu5^2 and mu5^6 - 5 mu5^4 - 6 mu5^2 - 1 = 0, as printed."""
    return all(zeta_condition_parts(mu)[k] for k in ZETA_PRINTED)


ZETA_PRINTED = ("mu6 = mu5^2/mu4", "mu7 = mu5^2", "mu5^6 - 5mu5^4 - 6mu5^2 - 1 = 0")
ZETA_SIGN_CORRECTED = "mu5^6 - 5mu5^4 + 6mu5^2 - 1 = 0"


def zeta_condition_parts(mu: ModuliPoint) -> dict[str, bool]:
    """Each condition separately, plus the sextic with the opposite sign on mu5^2.

    The two Moebius conditions say exactly that x -> mu7/x swaps the branch
    labels as the involution zeta does.  At mu0, mu5^2 = 2 + 2cos(2pi/7), a
    root of s^3 - 5s^2 + 6s - 1.
    """
    m4, m5, m6, m7 = mu.values
    sq = m5 * m5
    return {
        ZETA_PRINTED[0]: m6 == sq / m4,
        ZETA_PRINTED[1]: m7 == sq,
        ZETA_PRINTED[2]: _sextic(sq, -6).is_zero(),
        ZETA_SIGN_CORRECTED: _sextic(sq, 6).is_zero(),
    }


def zeta_swap_map(mu: ModuliPoint) -> MoebiusMap:
    """x -> mu7 / x."""
    return MoebiusMap(ZERO, mu.mu7, ONE, ZERO)


def scaling_map(mu: ModuliPoint) -> MoebiusMap:
    """x -> x / mu5."""
    return MoebiusMap(ONE, ZERO, ZERO, mu.mu5)


def duality_perm(mu: ModuliPoint) -> Perm:
    """Label permutation that x -> x/mu5 induces from mu to its dual parameter."""
    perm = induced_perm(scaling_map(mu), mu, dual_mu(mu))
    if perm is None:
        raise AssertionError("scaling does not carry the branch set onto the dual one")
    return perm


def all_sigmas() -> list[dict[int, int]]:
    return [dict(zip((4, 5, 6, 7), p)) for p in itertools.permutations((4, 5, 6, 7))]


def sigma_word(sigma: dict[int, int]) -> str:
    return group_words()[sigma_perm(sigma)]

