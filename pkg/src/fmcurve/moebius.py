"""The projective line over Q(zeta_7) and its Moebius transformations."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from fmcurve.field import ONE, ZERO, CycloElem, rho


class DegenerateError(ValueError):
    """Raised when points that must be distinct coincide."""


@dataclass(frozen=True)
class P1Point:
    """A point of P^1: a finite value, or infinity when ``value`` is None."""

    value: Optional[CycloElem] = None

    @classmethod
    def finite(cls, x) -> "P1Point":
        return cls(CycloElem.coerce(x))

    @property
    def is_inf(self) -> bool:
        return self.value is None

    def sort_key(self) -> tuple:
        return (1,) if self.is_inf else (0,) + self.value.sort_key()

    def __str__(self) -> str:
        return "oo" if self.is_inf else str(self.value)

    def to_json(self) -> dict:
        return {"inf": True} if self.is_inf else {"val": self.value.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "P1Point":
        if data.get("inf"):
            return INF
        return cls(CycloElem.from_json(data["val"]))


INF = P1Point()


def pt(x) -> P1Point:
    """Coerce a field element, rational, or P1Point into a P1Point."""
    if isinstance(x, P1Point):
        return x
    return P1Point.finite(x)


@dataclass(frozen=True, eq=False)
class MoebiusMap:
    """x -> (a x + b) / (c x + d); equality is up to a common scalar."""

    a: CycloElem
    b: CycloElem
    c: CycloElem
    d: CycloElem

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, CycloElem.coerce(getattr(self, name)))
        if (self.a * self.d - self.b * self.c).is_zero():
            raise DegenerateError("singular Moebius matrix")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(ONE, ZERO, ZERO, ONE)

    def __call__(self, p) -> P1Point:
        p = pt(p)
        if p.is_inf:
            return INF if self.c.is_zero() else P1Point(self.a / self.c)
        den = self.c * p.value + self.d
        if den.is_zero():
            return INF
        return P1Point((self.a * p.value + self.b) / den)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        """Composition: (self @ other)(x) = self(other(x))."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return MoebiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def _normalized(self) -> tuple[CycloElem, ...]:
        entries = (self.a, self.b, self.c, self.d)
        lead = next(e for e in entries if not e.is_zero())
        return tuple(e / lead for e in entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        m = (self.a, self.b, self.c, self.d)
        n = (other.a, other.b, other.c, other.d)
        return all((m[i] * n[j] - m[j] * n[i]).is_zero() for i in range(4) for j in range(i + 1, 4))

    def __hash__(self) -> int:
        return hash(self._normalized())

    def order(self, limit: int = 64) -> Optional[int]:
        """Order in PGL_2, or None if it exceeds ``limit``."""
        ident = MoebiusMap.identity()
        m = self
        for k in range(1, limit + 1):
            if m == ident:
                return k
            m = self @ m
        return None

    def fixed_points(self) -> list[P1Point]:
        """Fixed points of a map with c = 0 (the only case with rational fixed points here)."""
        if not self.c.is_zero():
            raise NotImplementedError("fixed points need a square root unless c = 0")
        if self == MoebiusMap.identity():
            raise ValueError("the identity fixes every point")
        shift = self.d - self.a
        return [INF] if shift.is_zero() else [P1Point(self.b / shift), INF]

    def __repr__(self) -> str:
        return f"MoebiusMap([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def three_point_map(p, q, r) -> MoebiusMap:
    """The unique map sending p -> oo, q -> 0, r -> 1."""
    p, q, r = pt(p), pt(q), pt(r)
    if len({p, q, r}) < 3:
        raise DegenerateError("three_point_map needs three distinct points")
    if p.is_inf:
        return MoebiusMap(ONE, -q.value, ZERO, r.value - q.value)
    if q.is_inf:
        return MoebiusMap(ZERO, r.value - p.value, ONE, -p.value)
    if r.is_inf:
        return MoebiusMap(ONE, -q.value, ONE, -p.value)
    rp, rq = r.value - p.value, r.value - q.value
    return MoebiusMap(rp, -q.value * rp, rq, -p.value * rq)


def cross_ratio(p1, p2, p3, p4) -> CycloElem:
    """Image of p4 under the normalization (p1, p2, p3) -> (oo, 0, 1)."""
    pts = [pt(x) for x in (p1, p2, p3, p4)]
    if len(set(pts)) < 4:
        raise DegenerateError("cross_ratio needs four distinct points")
    return three_point_map(*pts[:3])(pts[3]).value


class BranchSet(frozenset):
    """Seven distinct points of P^1."""

    def __new__(cls, points: Iterable):
        pts = [pt(x) for x in points]
        self = super().__new__(cls, pts)
        if len(pts) != 7 or len(self) != 7:
            raise DegenerateError(f"a branch set has 7 distinct points, got {len(self)} of {len(pts)}")
        return self

    def ordered(self) -> list[P1Point]:
        return sorted(self, key=P1Point.sort_key)

    def image(self, m: MoebiusMap) -> "BranchSet":
        return BranchSet(m(p) for p in self)


def branch_sets_equivalent(s1: BranchSet, s2: BranchSet) -> Optional[MoebiusMap]:
    """A Moebius map carrying s1 onto s2, or None.

    One source triple of s1 is fixed and all 210 ordered target triples in s2
    are tried.
    """
    src = s1.ordered()[:3]
    normal1 = frozenset(s1.image(three_point_map(*src)))
    for triple in itertools.permutations(s2.ordered(), 3):
        m2 = three_point_map(*triple)
        if frozenset(m2(p) for p in s2) == normal1:
            return m2.inverse() @ three_point_map(*src)
    return None


# The map sending 1 -> oo, rho -> 0, rho^2 -> 1.
A_MAP = MoebiusMap(ONE + rho(1), -(ONE + rho(1)) * rho(1), rho(1), -rho(1))


def roots_of_unity() -> BranchSet:
    return BranchSet(rho(k) for k in range(7))


def rotation() -> MoebiusMap:
    """z -> zeta * z."""
    return MoebiusMap(rho(1), ZERO, ZERO, ONE)
