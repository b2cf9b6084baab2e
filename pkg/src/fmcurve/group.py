"""The deck group H = Z_2^7 / <a1 a2 ... a7>, isomorphic to Z_2^6.

An element is a 7-bit mask over the involutions a1..a7 (bit j-1 for a_j),
canonicalized to the smaller of (mask, mask ^ 0b1111111).  Canonical masks
never have bit 6 set, so they are exactly the integers 0..63 and the group
law is plain XOR.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

FULL = 0b1111111
ORDER = 64


class GroupError(ValueError):
    pass


def canon(mask: int) -> int:
    if not 0 <= mask <= FULL:
        raise GroupError(f"mask out of range: {mask}")
    return min(mask, mask ^ FULL)


def elem(*indices: int) -> int:
    """The canonical mask of a_{i1} a_{i2} ... (indices 1..7, repeats cancel)."""
    mask = 0
    for i in indices:
        if not 1 <= i <= 7:
            raise GroupError(f"generator index out of range: {i}")
        mask ^= 1 << (i - 1)
    return canon(mask)


def mul(x: int, y: int) -> int:
    return canon(x ^ y)


def gen(j: int) -> int:
    return elem(j)


def word(mask: int) -> str:
    """Human-readable product, e.g. 'a1a3a7'."""
    if mask == 0:
        return "1"
    return "".join(f"a{j + 1}" for j in range(7) if mask >> j & 1)


def support(mask: int) -> tuple[int, ...]:
    return tuple(j + 1 for j in range(7) if mask >> j & 1)


@dataclass(frozen=True)
class Subgroup:
    elements: tuple[int, ...]
    _set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        els = tuple(sorted(set(canon(e) for e in self.elements)))
        object.__setattr__(self, "elements", els)
        if 0 not in els:
            raise GroupError("subgroup must contain the identity")
        n = len(els)
        if n & (n - 1):
            raise GroupError(f"order {n} is not a power of two")
        s = frozenset(els)
        if any(mul(x, y) not in s for x in els for y in els):
            raise GroupError("not closed under products")
        object.__setattr__(self, "_set", s)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return canon(x) in self._set

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def to_json(self) -> list[int]:
        return list(self.elements)


def _span(gens: Iterable[int], start: Iterable[int] = (0,)) -> frozenset:
    span = set(start)
    for g in gens:
        g = canon(g)
        if g not in span:
            span |= {mul(s, g) for s in span}
    return frozenset(span)


def generate(gens: Sequence[int]) -> Subgroup:
    return Subgroup(tuple(_span(gens)))


WHOLE = generate([gen(j) for j in range(1, 7)])
TRIVIAL = generate([])

K = generate([elem(1, 3, 7), elem(2, 3, 5), elem(1, 2, 4)])
KSTAR = generate([elem(1, 2, 6), elem(2, 3, 7), elem(1, 3, 4)])


def all_subgroups() -> list[Subgroup]:
    """Every subgroup of H, by breadth-first closure from the trivial group.

    A subgroup S is extended by one representative of each nontrivial coset of
    S; results are deduplicated by element set.
    """
    seen = {frozenset([0])}
    level = [frozenset([0])]
    while level:
        nxt = []
        for s in level:
            covered = set(s)
            for g in range(ORDER):
                if g in covered:
                    continue
                covered |= {mul(x, g) for x in s}
                t = _span([g], s)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        level = nxt
    return sorted((Subgroup(tuple(s)) for s in seen), key=lambda h: (h.order, h.elements))


@dataclass(frozen=True)
class GenAut:
    """Automorphism of H permuting the generators: a_j -> a_{perm[j-1]}."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, 8)):
            raise GroupError(f"not a permutation of 1..7: {self.perm}")

    def __call__(self, x: int) -> int:
        out = 0
        for j in range(7):
            if x >> j & 1:
                out |= 1 << (self.perm[j] - 1)
        return canon(out)

    def image(self, h: Subgroup) -> Subgroup:
        return Subgroup(tuple(self(x) for x in h.elements))

    def preserves(self, h: Subgroup) -> bool:
        return self.image(h) == h

    def __matmul__(self, other: "GenAut") -> "GenAut":
        return GenAut(tuple(self.perm[other.perm[j] - 1] for j in range(7)))

    @classmethod
    def identity(cls) -> "GenAut":
        return cls(tuple(range(1, 8)))


LAMBDA = GenAut((2, 3, 4, 5, 6, 7, 1))
ZETA_AUT = GenAut((2, 1, 7, 6, 5, 4, 3))


def generated_aut_group(gens: Sequence[GenAut]) -> set[GenAut]:
    group = {GenAut.identity()}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s @ g
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def invariant_subgroups(aut: GenAut, subgroups: Sequence[Subgroup] | None = None) -> list[Subgroup]:
    if subgroups is None:
        subgroups = all_subgroups()
    return [h for h in subgroups if aut.preserves(h)]


def invariant_subgroups_by_orbits(aut: GenAut) -> list[Subgroup]:
    """Independent route: every aut-invariant subgroup is the span of the
    aut-orbits it contains, so span every union of orbits."""
    orbits = orbit_representatives(aut)
    found = set()
    for r in range(len(orbits) + 1):
        for combo in itertools.combinations(orbits, r):
            found.add(_span(itertools.chain.from_iterable(combo)))
    return sorted((Subgroup(tuple(s)) for s in found), key=lambda h: (h.order, h.elements))


def acts_freely(j: Subgroup) -> bool:
    """True iff j contains none of the involutions with fixed points."""
    return all(gen(k) not in j for k in range(1, 8))


# ---------------------------------------------------------------------------
# quotient bookkeeping for G = H / k


def _coset_key(x: int, k: Subgroup) -> frozenset:
    return frozenset(mul(x, y) for y in k.elements)


def quotient_relations(k: Subgroup) -> dict[int, tuple[int, ...]]:
    """For j = 4..7, the subset T of {1,2,3} with a_j* = prod_{t in T} a_t* in H/k."""
    if k.order != 8 or not acts_freely(k):
        raise GroupError("quotient_relations needs a free subgroup of order 8")
    words = {}
    for r in range(4):
        for t in itertools.combinations((1, 2, 3), r):
            words[_coset_key(elem(*t), k)] = t
    if len(words) != 8:
        raise GroupError("images of a1, a2, a3 do not generate H/k")
    return {j: words[_coset_key(gen(j), k)] for j in range(4, 8)}


def generator_index_of_coset(x: int, k: Subgroup) -> int | None:
    """The j with a_j in x*k, if any (unique when k is free of order 8)."""
    hits = [j for j in range(1, 8) if mul(gen(j), x) in k]
    return hits[0] if hits else None


def fano_lines(k: Subgroup) -> list[tuple[int, int, int]]:
    """The order-4 subgroups of H/k, each as the sorted triple of generator
    indices whose images are its involutions."""
    if k.order != 8 or not acts_freely(k):
        raise GroupError("fano_lines needs a free subgroup of order 8")
    reps = {}
    for x in range(ORDER):
        reps.setdefault(_coset_key(x, k), x)
    cosets = [x for key, x in reps.items() if 0 not in key]
    lines = set()
    for x, y in itertools.combinations(cosets, 2):
        triple = tuple(sorted(generator_index_of_coset(z, k) for z in (x, y, mul(x, y))))
        lines.add(triple)
    return sorted(lines)


def preimage(k: Subgroup, indices: Iterable[int]) -> Subgroup:
    """The subgroup of H generated by k and the a_j for j in indices."""
    return generate(list(k.elements) + [gen(j) for j in indices])


def conjugation_action(source: Sequence[int]) -> GenAut:
    """Generator permutation induced by a scaled coordinate permutation.

    ``source[k-1]`` is the old coordinate that feeds new coordinate k, i.e.
    the map is x -> (s_k x_{source[k]})_k.  Conjugating the sign flip of x_j by
    it flips new coordinate k with source[k] = j; the scalars cancel.
    """
    if sorted(source) != list(range(1, 8)):
        raise GroupError(f"not a permutation of 1..7: {source}")
    inv = {j: k + 1 for k, j in enumerate(source)}
    return GenAut(tuple(inv[j] for j in range(1, 8)))


# Elements named in the hand proof that lambda-invariant subgroups are only
# H, K and K*, and the subgroup each one forces.
LEMMA_CASES = [
    ((1,), "H"),
    ((1, 2), "H"),
    ((1, 3), "H"),
    ((1, 4), "H"),
    ((1, 2, 3), "H"),
    ((1, 2, 5), "H"),
    ((1, 3, 5), "H"),
    ((1, 2, 4), "K"),
    ((1, 2, 6), "K*"),
    ((1, 3, 4), "K*"),
]

# The list of elements one of which every nontrivial invariant subgroup is
# claimed to contain.
LEMMA_MUST_CONTAIN = [(1,), (1, 2), (1, 3), (1, 4), (1, 2, 3), (1, 2, 4), (1, 2, 6), (1, 3, 4)]


def name_of(h: Subgroup) -> str:
    return {WHOLE: "H", K: "K", KSTAR: "K*", TRIVIAL: "1"}.get(h, f"<order {h.order}>")


def invariant_closure(x: int, aut: GenAut) -> Subgroup:
    """Smallest aut-invariant subgroup containing x."""
    orb, y = [], canon(x)
    while y not in orb:
        orb.append(y)
        y = aut(y)
    return generate(orb)


def lemma_replay(aut: GenAut = LAMBDA) -> list[dict]:
    out = []
    for idx, expected in LEMMA_CASES:
        got = name_of(invariant_closure(elem(*idx), aut))
        out.append({"element": word(elem(*idx)), "expected": expected, "found": got, "ok": got == expected})
    return out


def orbit_representatives(aut: GenAut) -> list[list[int]]:
    orbits, seen = [], {0}
    for x in range(1, ORDER):
        if x in seen:
            continue
        orb, y = [], x
        while y not in orb:
            orb.append(y)
            y = aut(y)
        seen.update(orb)
        orbits.append(orb)
    return orbits


def uncovered_orbits(aut: GenAut = LAMBDA) -> list[str]:
    """Nontrivial aut-orbits containing none of LEMMA_MUST_CONTAIN."""
    listed = {elem(*idx) for idx in LEMMA_MUST_CONTAIN}
    return [word(min(o, key=lambda m: (bin(m).count("1"), m))) for o in orbit_representatives(aut)
            if not listed & set(o)]
