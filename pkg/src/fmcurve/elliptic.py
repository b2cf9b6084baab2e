"""Elliptic curves as double covers of P^1 branched at four points."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from fmcurve.field import CycloElem, cos_2pi_k_over_7, rho
from fmcurve.moebius import INF, A_MAP, BranchSet, DegenerateError, P1Point, cross_ratio, pt


@dataclass(frozen=True)
class EllipticModel:
    """y^2 = prod (x - r) over the finite roots; with 3 roots, oo is the fourth branch point."""

    finite_roots: tuple[P1Point, ...]

    def __post_init__(self):
        roots = tuple(pt(r) for r in self.finite_roots)
        object.__setattr__(self, "finite_roots", roots)
        if any(r.is_inf for r in roots):
            raise DegenerateError("finite_roots must be finite; use from_branch for oo")
        if len(set(roots)) != len(roots):
            raise DegenerateError("repeated root")
        if len(roots) not in (3, 4):
            raise DegenerateError(f"effective branch count is {len(roots) + (len(roots) % 2)}, not 4")

    @classmethod
    def from_branch(cls, points: Iterable) -> "EllipticModel":
        pts = [pt(p) for p in points]
        if len(set(pts)) != 4 or len(pts) != 4:
            raise DegenerateError("an elliptic double cover has exactly four branch points")
        return cls(tuple(sorted((p for p in pts if not p.is_inf), key=P1Point.sort_key)))

    @property
    def branch(self) -> frozenset:
        pts = set(self.finite_roots)
        if len(pts) == 3:
            pts.add(INF)
        return frozenset(pts)

    def ordered_branch(self) -> list[P1Point]:
        return sorted(self.branch, key=P1Point.sort_key)


def j_from_lambda(lam: CycloElem) -> CycloElem:
    num = lam * lam - lam + 1
    return 256 * num * num * num / (lam * lam * (lam - 1) * (lam - 1))


def j_invariant(e: EllipticModel) -> CycloElem:
    return j_from_lambda(cross_ratio(*e.ordered_branch()))


def isomorphic(e1: EllipticModel, e2: EllipticModel) -> bool:
    return j_invariant(e1) == j_invariant(e2)


def t_curves(mu, lines=None) -> list[EllipticModel]:
    """The seven elliptic quotients, one per Fano line, in line order."""
    from fmcurve import group

    if lines is None:
        lines = group.fano_lines(group.K)
    return [EllipticModel.from_branch([mu.mu(k) for k in range(1, 8) if k not in line]) for line in lines]


def t_label(line) -> str:
    """Conventional name T_ij of the curve for a line, using its two smallest indices."""
    return f"T{line[0]}{line[1]}"


def e_curves_mu0() -> dict[str, EllipticModel]:
    """The curve E and the five root-of-unity curves E1..E5, plus E6."""
    z = rho
    e = EllipticModel.from_branch([INF, 0, 1, A_MAP(z(6))])
    out = {"E": e}
    quads = {"E1": (0, 1, 2, 3), "E2": (0, 1, 2, 4), "E3": (0, 1, 2, 5), "E4": (0, 1, 3, 4), "E5": (0, 1, 4, 5)}
    for name, ks in quads.items():
        out[name] = EllipticModel(tuple(z(k) for k in ks))
    out["E6"] = EllipticModel((1, cos_2pi_k_over_7(1), cos_2pi_k_over_7(2), cos_2pi_k_over_7(3)))
    return out


def thirty_five_factors(branch: BranchSet) -> Counter:
    """j-invariants of the 35 four-point subsets, as a multiset."""
    pts = branch.ordered()
    return Counter(j_invariant(EllipticModel.from_branch(q)) for q in itertools.combinations(pts, 4))
