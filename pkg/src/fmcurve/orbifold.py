"""Riemann-Hurwitz bookkeeping for quotients of the genus-49 curve."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from fmcurve import group
from fmcurve.group import Subgroup, gen
from fmcurve.moebius import BranchSet, MoebiusMap

GENUS_TOP = 49


@dataclass(frozen=True)
class OrbSignature:
    genus: int
    cone_orders: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.genus < 0 or any(c < 2 for c in self.cone_orders):
            raise ValueError(f"invalid signature {self}")
        object.__setattr__(self, "cone_orders", tuple(sorted(self.cone_orders)))

    def euler(self) -> Fraction:
        """Orbifold Euler characteristic."""
        return 2 - 2 * self.genus - sum(1 - Fraction(1, n) for n in self.cone_orders)

    def __str__(self) -> str:
        return f"({self.genus};{','.join(map(str, self.cone_orders))})"


def quotient_genus_and_cones(j: Subgroup) -> OrbSignature:
    """Signature of the orbifold (genus-49 curve)/J.

    The quotient covers the sphere with degree n = |H/J|.  Over the branch
    point with label k the stabilizer is <a_k>: if a_k is not in J the n sheets
    pair up into n/2 ramification points; otherwise the n points above it are
    cone points of order 2 of the orbifold.
    """
    n = group.ORDER // j.order
    ramified = [k for k in range(1, 8) if gen(k) not in j]
    chi = 2 * n - len(ramified) * (n // 2)  # 2 - 2g
    if chi % 2:
        raise AssertionError("Riemann-Hurwitz produced a non-integer genus")
    genus = (2 - chi) // 2
    cones = (7 - len(ramified)) * n
    return OrbSignature(genus, (2,) * cones)


def fixed_point_count(r: int, k: Subgroup) -> int:
    """Fixed points of the involution induced by a_r on the quotient by a free k of order 8."""
    if not 1 <= r <= 7:
        raise ValueError("r must be in 1..7")
    if k.order != 8 or not group.acts_freely(k):
        raise ValueError("k must be a free subgroup of order 8")
    if gen(r) in k:
        raise ValueError(f"a{r} lies in k")
    n = group.ORDER // k.order
    # points above label s are fixed iff the image of a_r is the stabilizer a_s*
    return sum(n // 2 for s in range(1, 8) if group.mul(gen(r), gen(s)) in k)


def chain_consistent(j1: Subgroup, j2: Subgroup) -> bool:
    """Orbifold Euler characteristics multiply by the degree |J2/J1|."""
    if not j1 <= j2:
        raise ValueError("need J1 <= J2")
    s1, s2 = quotient_genus_and_cones(j1), quotient_genus_and_cones(j2)
    return s1.euler() == s2.euler() * (j2.order // j1.order)


def cyclic_quotient_signature(m: MoebiusMap, cones: BranchSet, cone_order: int = 2) -> OrbSignature:
    """Quotient of the sphere, with ``cones`` as cone points of one order, by <m>.

    m must have order n with both fixed points rational.  Orbits of cone
    points become cone points of order cone_order * |stabilizer|; fixed points
    of m that are not cone points become cone points of order n.
    """
    n = m.order()
    if n is None:
        raise ValueError("map of infinite order")
    fixed = m.fixed_points()
    orders = []
    seen = set()
    for p in cones.ordered():
        if p in seen:
            continue
        orbit, q = [], p
        while q not in orbit:
            orbit.append(q)
            q = m(q)
        if any(o not in cones for o in orbit):
            raise ValueError("cone set is not invariant")
        seen.update(orbit)
        orders.append(cone_order * (n // len(orbit)))
    orders += [n for p in fixed if p not in cones]
    # underlying sphere -> sphere/<m>: 2 = n(2 - 2g) - sum (e_p - 1)
    ram = sum(n - 1 for _ in fixed)
    two_minus_2g = Fraction(2 + ram, n)
    if two_minus_2g.denominator != 1 or two_minus_2g % 2:
        raise AssertionError("inconsistent Riemann-Hurwitz data")
    genus = (2 - int(two_minus_2g)) // 2
    return OrbSignature(genus, tuple(o for o in orders if o > 1))


def rotation_quotient_signature() -> OrbSignature:
    from fmcurve.moebius import roots_of_unity, rotation

    return cyclic_quotient_signature(rotation(), roots_of_unity())


def z2cubed_quotient_candidates(genus: int = 7, group_order: int = 8) -> list[tuple[int, int]]:
    """(g', r) with 2g - 2 = |G|(2g' - 2) + r|G|/2: quotients by Z_2^3 whose
    only cone points have order 2."""
    out = []
    for g in range(genus + 1):
        rest = 2 * genus - 2 - group_order * (2 * g - 2)
        if rest >= 0 and rest % (group_order // 2) == 0:
            out.append((g, rest // (group_order // 2)))
    return out


def admits_order7_symmetry(g: int, r: int) -> bool:
    """Whether an order-7 automorphism of a genus-g surface can permute r marked points.

    Marked-point orbits have size 1 or 7, so at least r mod 7 points are fixed;
    Riemann-Hurwitz for the cyclic quotient, 2 - 2g = 7(2 - 2g'') - 6F, must
    then have a solution with F >= that many fixed points.
    """
    must_fix = r % 7
    for g2 in range(g + 1):
        rest = 7 * (2 - 2 * g2) - (2 - 2 * g)
        if rest >= 0 and rest % 6 == 0 and rest // 6 >= must_fix:
            return True
    return False
