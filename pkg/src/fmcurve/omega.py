"""Parameter points mu = (mu4, mu5, mu6, mu7) of the four-dimensional family."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

from fmcurve.field import ONE, ZERO, CycloElem, random_elem, random_rational
from fmcurve.moebius import INF, BranchSet, P1Point


class OmegaError(ValueError):
    """The parameter leaves the domain: some mu_j in {0, 1} or two coincide."""


@dataclass(frozen=True)
class ModuliPoint:
    mu4: CycloElem
    mu5: CycloElem
    mu6: CycloElem
    mu7: CycloElem

    def __post_init__(self):
        for name in ("mu4", "mu5", "mu6", "mu7"):
            object.__setattr__(self, name, CycloElem.coerce(getattr(self, name)))
        vals = self.values
        for j, v in zip(range(4, 8), vals):
            if v == ZERO or v == ONE:
                raise OmegaError(f"mu{j} = {v} is not allowed (must avoid 0 and 1)")
        if len(set(vals)) < 4:
            raise OmegaError("the mu_j must be pairwise distinct")

    @classmethod
    def of(cls, *vals) -> "ModuliPoint":
        if len(vals) == 1:
            vals = tuple(vals[0])
        return cls(*vals)

    @property
    def values(self) -> tuple[CycloElem, ...]:
        return (self.mu4, self.mu5, self.mu6, self.mu7)

    def mu(self, k: int) -> P1Point:
        """Branch value with label k: mu1 = oo, mu2 = 0, mu3 = 1, then mu4..mu7."""
        if k == 1:
            return INF
        if k == 2:
            return P1Point(ZERO)
        if k == 3:
            return P1Point(ONE)
        return P1Point(self.values[k - 4])

    def alpha(self, j: int) -> CycloElem:
        """Coefficient of x1^2 in the quadric containing x_j^2 (j = 3..7)."""
        return ONE if j == 3 else self.values[j - 4]

    def branch_points(self) -> list[P1Point]:
        return [self.mu(k) for k in range(1, 8)]

    def branch_set(self) -> BranchSet:
        return BranchSet(self.branch_points())

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]

    @classmethod
    def from_json(cls, data) -> "ModuliPoint":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list) or len(data) != 4:
            raise ValueError("mu must be a JSON list of four field elements")
        return cls(*(CycloElem.from_json(x) for x in data))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def random_point(rng: random.Random, rational: bool = False) -> ModuliPoint:
    while True:
        draw = random_rational if rational else random_elem
        try:
            return ModuliPoint(*(draw(rng) for _ in range(4)))
        except OmegaError:
            continue


FIXTURE = ModuliPoint(2, 3, 4, 5)
