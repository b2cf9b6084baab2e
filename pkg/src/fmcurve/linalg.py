"""Exact linear algebra over Q(zeta_7) with fraction-free row updates."""
from __future__ import annotations

from typing import Sequence

from fmcurve.field import ZERO, CycloElem

Matrix = list[list[CycloElem]]


def _copy(rows: Sequence[Sequence]) -> Matrix:
    return [[CycloElem.coerce(x) for x in row] for row in rows]


def echelon(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Row echelon form and pivot columns.

    Elimination uses r_i <- p * r_i - e * r_p so no division happens during
    the sweep; rows are rescaled by their pivot only at the end.
    """
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                e = m[i][c]
                m[i] = [p * x - e * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i, c in enumerate(pivots):
        inv = m[i][c].inv()
        m[i] = [x * inv for x in m[i]]
    return m[: len(pivots)], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows)[1])


def in_row_space(rows: Sequence[Sequence], v: Sequence) -> bool:
    return rank(list(rows) + [list(v)]) == rank(rows)


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {x : rows . x = 0}."""
    if not rows:
        return [[CycloElem.coerce(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = CycloElem.coerce(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def dot(u: Sequence[CycloElem], v: Sequence[CycloElem]) -> CycloElem:
    out = ZERO
    for x, y in zip(u, v):
        out = out + x * y
    return out
