"""The quadric model of the genus-49 curve and its quotient models.

The curve lives in P^6 and is cut out by five diagonal quadrics

    alpha_j x1^2 + x2^2 + x_j^2 = 0,   j = 3..7,  alpha = (1, mu4, mu5, mu6, mu7).

Every quadric is diagonal, so a quadric is stored as its coefficient vector
over (x1^2, ..., x7^2).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from fmcurve import group
from fmcurve.elliptic import EllipticModel
from fmcurve.field import ONE, ZERO, CycloElem
from fmcurve.linalg import dot, in_row_space, nullspace
from fmcurve.moebius import A_MAP, rho
from fmcurve.omega import ModuliPoint

# ---------------------------------------------------------------------------
# quadrics


@dataclass(frozen=True)
class QuadricSystem:
    mu: ModuliPoint
    rows: tuple[tuple[CycloElem, ...], ...] = field(init=False)

    def __post_init__(self):
        rows = []
        for j in range(3, 8):
            row = [ZERO] * 7
            row[0] = self.mu.alpha(j)
            row[1] = ONE
            row[j - 1] = ONE
            rows.append(tuple(row))
        object.__setattr__(self, "rows", tuple(rows))

    def to_json(self) -> list:
        return [[c.to_json() for c in row] for row in self.rows]

    def render(self) -> list[str]:
        names = {3: "1", 4: "mu4", 5: "mu5", 6: "mu6", 7: "mu7"}
        out = []
        for j in range(3, 8):
            lead = "x1^2" if j == 3 else f"{names[j]}*x1^2"
            out.append(f"{lead} + x2^2 + x{j}^2 = 0")
        return out


def build_quadrics(mu: ModuliPoint) -> QuadricSystem:
    return QuadricSystem(mu)


# ---------------------------------------------------------------------------
# smoothness


def _coordinate_forms(mu: ModuliPoint) -> list[tuple[CycloElem, CycloElem]]:
    """x_i^2 as a linear form in (X1, X2) = (x1^2, x2^2) on the solution set."""
    forms = [(ONE, ZERO), (ZERO, ONE)]
    for j in range(3, 8):
        forms.append((-mu.alpha(j), -ONE))
    return forms


def _label(j: int) -> str:
    return "1" if j == 3 else f"mu{j}"


def _jacobian_entry(mu: ModuliPoint, row_j: int, col: int):
    """(coefficient, variable index) of d(quadric_j)/dx_col, or None if zero."""
    if col == 1:
        return (2 * mu.alpha(row_j), 1)
    if col == 2:
        return (CycloElem.coerce(2), 2)
    if col == row_j:
        return (CycloElem.coerce(2), row_j)
    return None


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symbolic_minor(mu: ModuliPoint, cols: Sequence[int]) -> dict[tuple[int, ...], CycloElem]:
    """Determinant of the 5x5 Jacobian minor on ``cols`` as {monomial: coefficient}."""
    rows = range(3, 8)
    out: dict[tuple[int, ...], CycloElem] = {}
    for p in itertools.permutations(range(5)):
        coef, mono = CycloElem.coerce(_perm_sign(p)), []
        for i, j in enumerate(rows):
            e = _jacobian_entry(mu, j, cols[p[i]])
            if e is None:
                break
            coef = coef * e[0]
            mono.append(e[1])
        else:
            key = tuple(sorted(mono))
            out[key] = out.get(key, ZERO) + coef
    return {k: v for k, v in out.items() if not v.is_zero()}


def _render_monomial(coef: CycloElem, mono: Sequence[int]) -> str:
    return f"({coef})*" + "*".join(f"x{v}" for v in mono)


def _subtraction_reason(zeros: frozenset) -> str | None:
    pair = sorted(j for j in zeros if j >= 3)[:2]
    if len(pair) < 2:
        return None
    j, k = pair
    return f"subtracting quadrics {j} and {k} gives ({_label(k)} - {_label(j)})*x1^2 = 0"


def _pattern_case(mu: ModuliPoint, zeros: frozenset, forms) -> dict:
    case = {"vanishing": sorted(zeros)}
    null = nullspace([list(forms[i - 1]) for i in sorted(zeros)], 2)
    if not null:
        sub = _subtraction_reason(zeros)
        reason = "forces every coordinate to vanish"
        case.update(status="inconsistent", reason=f"{sub}, which {reason}" if sub else reason)
        return case
    forced = [i for i in range(1, 8) if i not in zeros
              and all(dot(forms[i - 1], v).is_zero() for v in null)]
    if forced:
        reason = _subtraction_reason(zeros) or "forces " + ", ".join(f"x{i} = 0" for i in forced)
        case.update(status="inconsistent", reason=reason, forced=forced)
        return case
    nonzero = set(range(1, 8)) - zeros
    for cols in itertools.combinations(range(1, 8), 5):
        det = symbolic_minor(mu, cols)
        if len(det) == 1:
            (mono, coef), = det.items()
            if set(mono) <= nonzero:
                case.update(status="nonsingular-minor", columns=list(cols),
                            determinant=_render_monomial(coef, mono))
                return case
    case.update(status="undischarged")
    return case


@dataclass
class SmoothnessCertificate:
    mu: ModuliPoint
    cases: list[dict]

    @property
    def ok(self) -> bool:
        return all(c["status"] != "undischarged" for c in self.cases)

    @property
    def witnesses(self) -> list[dict]:
        return [c for c in self.cases if c["status"] == "undischarged"]

    def case(self, *zeros: int) -> dict:
        key = sorted(zeros)
        return next(c for c in self.cases if c["vanishing"] == key)


def smoothness_certificate(mu: ModuliPoint) -> SmoothnessCertificate:
    """Case analysis over all 127 proper vanishing patterns of (x1, ..., x7).

    A pattern is consistent when the quadrics admit a solution whose zero set
    is exactly the pattern; every consistent pattern gets a 5x5 Jacobian minor
    that is a single monomial in coordinates nonzero on the pattern.
    """
    forms = _coordinate_forms(mu)
    cases = []
    for r in range(7):
        for zeros in itertools.combinations(range(1, 8), r):
            cases.append(_pattern_case(mu, frozenset(zeros), forms))
    return SmoothnessCertificate(mu, cases)


# ---------------------------------------------------------------------------
# linear automorphisms


@dataclass(frozen=True)
class LinearAutWitness:
    """x -> (s_k^(1/2) x_{source[k]})_k, recorded through the squares s_k only."""

    source: tuple[int, ...]
    squared_scalars: tuple[CycloElem, ...]
    name: str = ""

    def __post_init__(self):
        if sorted(self.source) != list(range(1, 8)):
            raise ValueError("source must be a permutation of 1..7")
        sq = tuple(CycloElem.coerce(s) for s in self.squared_scalars)
        if len(sq) != 7 or any(s.is_zero() for s in sq):
            raise ValueError("need seven nonzero squared scalars")
        object.__setattr__(self, "squared_scalars", sq)

    def pull_back(self, quadric: Sequence[CycloElem]) -> list[CycloElem]:
        out = [ZERO] * 7
        for k in range(7):
            out[self.source[k] - 1] = out[self.source[k] - 1] + quadric[k] * self.squared_scalars[k]
        return out


def verify_linear_aut(mu: ModuliPoint, w: LinearAutWitness) -> bool:
    """True iff every pulled-back quadric lies in the span of the system."""
    rows = build_quadrics(mu).rows
    return all(in_row_space(rows, w.pull_back(q)) for q in rows)


def admissible_scalars_exist(mu: ModuliPoint, source: Sequence[int]) -> bool:
    """Whether some nonzero squared scalars make the permutation an automorphism.

    The span of the quadrics is cut out by two linear functionals; pulling
    back stays inside it iff a linear system in the seven squared scalars
    holds.  Over C a solution with all entries nonzero exists iff no
    coordinate vanishes on the whole solution space.
    """
    rows = [list(r) for r in build_quadrics(mu).rows]
    annihilator = nullspace(rows, 7)
    eqs = []
    for q in rows:
        for ell in annihilator:
            eqs.append([q[k] * ell[source[k] - 1] for k in range(7)])
    sols = nullspace(eqs, 7)
    return bool(sols) and all(any(not v[k].is_zero() for v in sols) for k in range(7))


def _a_of_rho(k: int) -> CycloElem:
    return A_MAP(rho(k)).value


def lifted_rotation_witness(sign: int = -1) -> LinearAutWitness:
    """Lift of z -> zeta z at mu0: coordinates [x7 : c2 x1 : x2 : c4 x3 : ... : c7 x6].

    ``sign`` is the sign in c_j^2 = sign * A(zeta^(j-1)) for j = 4..7
    (the constants carry a factor i, hence -1).
    """
    a = _a_of_rho
    sq = (ONE, a(6), ONE, sign * a(3), sign * a(4), sign * a(5), sign * a(6))
    return LinearAutWitness((7, 1, 2, 3, 4, 5, 6), sq, "T-hat")


def lifted_involution_witness(sign: int = 1) -> LinearAutWitness:
    """Lift inducing the generator swap at mu0: [x2 : d2 x1 : x7 : d4 x6 : d5 x5 : d6 x4 : d7 x3]."""
    a = _a_of_rho
    sq = (ONE, a(6), ONE, sign * a(3), sign * a(4), sign * a(5), sign * a(6))
    return LinearAutWitness((2, 1, 7, 6, 5, 4, 3), sq, "U")


# ---------------------------------------------------------------------------
# invariant monomials of the affine chart x7 = 1

Monomial = tuple[int, ...]  # exponents of x1..x6 (or x1..x7)


def sign_of(mask: int, mono: Monomial) -> int:
    """Sign acquired by x^mono (in x_j/x7, j <= 6) under the group element."""
    flip7 = mask >> 6 & 1
    parity = sum(e * ((mask >> j & 1) ^ flip7) for j, e in enumerate(mono[:6]))
    return -1 if parity % 2 else 1


def _monomials(nvars: int, max_degree: int):
    for deg in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), deg):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            yield tuple(e)


def invariant_monomials(k: group.Subgroup, max_degree: int = 4) -> list[Monomial]:
    """Minimal generators, among monomials of degree <= max_degree in x1..x6,
    of the monomials fixed by k: invariant ones that are not a product of two
    invariant nonconstant ones.  Squares first, then by degree."""
    if k.order != 8 or not group.acts_freely(k):
        raise group.GroupError("needs a free subgroup of order 8")
    inv = [m for m in _monomials(6, max_degree) if all(sign_of(g, m) == 1 for g in k.elements)]
    inv_set = set(inv)
    minimal = []
    for m in inv:
        decomposable = any(
            tuple(a - b for a, b in zip(m, d)) in inv_set
            for d in inv_set
            if d != m and all(b <= a for a, b in zip(m, d))
        )
        if not decomposable:
            minimal.append(m)
    squares = sorted((m for m in minimal if sorted(m) == [0, 0, 0, 0, 0, 2]), reverse=True)
    rest = sorted((m for m in minimal if m not in squares), key=lambda m: (sum(m), [-e for e in m]))
    return squares + rest


def monomial_from_vars(*idx: int) -> Monomial:
    e = [0] * 6
    for i in idx:
        e[i - 1] += 1
    return tuple(e)


# the thirteen generators t1..t13 for K, in the published order
T_MONOMIALS: list[Monomial] = [
    monomial_from_vars(1, 1), monomial_from_vars(2, 2), monomial_from_vars(3, 3),
    monomial_from_vars(4, 4), monomial_from_vars(5, 5), monomial_from_vars(6, 6),
    monomial_from_vars(1, 2, 5), monomial_from_vars(1, 2, 3, 6), monomial_from_vars(1, 4, 6),
    monomial_from_vars(1, 3, 4, 5), monomial_from_vars(2, 4, 5, 6), monomial_from_vars(2, 3, 4),
    monomial_from_vars(3, 5, 6),
]

# binomial relations among t1..t13: (left factors, right factors)
BINOMIAL_RELATIONS: list[tuple[tuple[int, ...], tuple[int, ...]]] = [
    ((6, 10), (9, 13)), ((6, 7, 12), (8, 11)), ((5, 9, 12), (10, 11)),
    ((5, 8), (7, 13)), ((5, 6, 12), (11, 13)), ((4, 8), (9, 12)), ((4, 7, 13), (10, 11)),
    ((4, 6, 7), (9, 11)), ((3, 11), (12, 13)), ((3, 6, 7), (8, 13)), ((3, 5, 9), (10, 13)),
    ((3, 5, 6), (13, 13)), ((3, 4, 7), (10, 12)), ((2, 10), (7, 12)), ((2, 9, 13), (8, 11)),
    ((2, 5, 9), (7, 11)), ((2, 4, 13), (11, 12)), ((2, 4, 5, 6), (11, 11)), ((2, 3, 9), (8, 12)),
    ((2, 3, 4), (12, 12)), ((1, 12, 13), (8, 10)), ((1, 11), (7, 9)), ((1, 6, 12), (8, 9)),
    ((1, 5, 12), (7, 10)), ((1, 4, 13), (9, 10)), ((1, 4, 6), (9, 9)), ((1, 3, 4, 5), (10, 10)),
    ((1, 2, 13), (7, 8)), ((1, 2, 5), (7, 7)), ((1, 2, 3, 6), (8, 8)),
]

# linear relations: t2 + t_j + alpha_j * t1 = 0 for j = 3..7, with t7-slot := 1
LINEAR_RELATIONS = [3, 4, 5, 6, 7]

# sign patterns of the three generating involutions of the quotient group on t1..t13
PUBLISHED_INVOLUTION_SIGNS = [
    (1, 1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1),
    (1, 1, 1, 1, 1, 1, 1, -1, 1, -1, 1, -1, -1),
]


def _product(monos: Sequence[Monomial], factors: Sequence[int]) -> Monomial:
    out = [0] * len(monos[0])
    for f in factors:
        out = [a + b for a, b in zip(out, monos[f - 1])]
    return tuple(out)


def render_relation(lhs: Sequence[int], rhs: Sequence[int]) -> str:
    def side(fs):
        counts = {f: fs.count(f) for f in fs}
        return "*".join(f"t{f}^{c}" if c > 1 else f"t{f}" for f, c in counts.items())
    return f"{side(list(lhs))} = {side(list(rhs))}"


def linear_relation_vector(mu: ModuliPoint, j: int) -> list[CycloElem]:
    """Linear relation j over (x1^2..x7^2) after t_i -> x_i^2 and 1 -> x7^2."""
    v = [ZERO] * 7
    v[0] = mu.alpha(j)
    v[1] = ONE
    v[j - 1] = v[j - 1] + ONE
    return v


@dataclass
class RelationCheck:
    text: str
    kind: str
    ok: bool


def check_quotient_relations(mu: ModuliPoint) -> list[RelationCheck]:
    out = []
    quadrics = build_quadrics(mu).rows
    for j in LINEAR_RELATIONS:
        v = linear_relation_vector(mu, j)
        slot = f"t{j}" if j < 7 else "1"
        text = ("" if j == 3 else f"mu{j}*") + f"t1 + t2 + {slot} = 0"
        out.append(RelationCheck(text, "linear", tuple(v) == quadrics[j - 3]))
    for lhs, rhs in BINOMIAL_RELATIONS:
        ok = _product(T_MONOMIALS, lhs) == _product(T_MONOMIALS, rhs)
        out.append(RelationCheck(render_relation(lhs, rhs), "binomial", ok))
    return out


def verify_quotient_relations(mu: ModuliPoint) -> bool:
    return all(r.ok for r in check_quotient_relations(mu))


def involution_signs(j: int, monos: Sequence[Monomial] = T_MONOMIALS) -> tuple[int, ...]:
    return tuple(sign_of(group.gen(j), m) for m in monos)


def derived_relations(monos: Sequence[Monomial]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A binomial relation system for any list of 6 squares + 7 odd generators.

    For odd generators p <= q the product t_p t_q is rewritten as the odd
    generator in its parity class (if any) times squares.
    """
    odd = [i for i, m in enumerate(monos, 1) if any(e % 2 for e in m)]
    square_of = {m.index(2) + 1: i for i, m in enumerate(monos, 1) if m not in [monos[o - 1] for o in odd]}
    parity = {tuple(e % 2 for e in monos[i - 1]): i for i in odd}
    out = []
    for p, q in itertools.combinations_with_replacement(odd, 2):
        prod = _product(monos, (p, q))
        cls = tuple(e % 2 for e in prod)
        rest = list(prod)
        right = []
        if any(cls):
            r = parity[cls]
            right.append(r)
            rest = [a - b for a, b in zip(rest, monos[r - 1])]
        for v, e in enumerate(rest, 1):
            right += [square_of[v]] * (e // 2)
        out.append(((p, q), tuple(sorted(right))))
    return out


# ---------------------------------------------------------------------------
# fiber products of elliptic curves


@dataclass
class FiberProductModel:
    quotient: str
    lines: list[tuple[int, int, int]]
    components: list[EllipticModel]
    labels: list[str]

    def root_lists(self) -> list[list[int]]:
        """Branch labels of each component (1 = oo, 2 = 0, 3 = 1, k = mu_k)."""
        return [sorted(set(range(1, 8)) - set(line)) for line in self.lines]

    def render(self, var: str = "x", y: str = "y") -> list[str]:
        out = []
        for n, labels in enumerate(self.root_lists(), 1):
            out.append(f"{y}{n}^2 = " + "".join(_factor(k, var) for k in labels if k != 1))
        return out

    def independent(self) -> bool:
        return lines_independent(self.lines)


def _factor(k: int, var: str) -> str:
    return {2: var, 3: f"({var}-1)"}.get(k, f"({var}-mu{k})")


def line_character(line: Sequence[int]) -> int:
    """Bitmask over branch labels where the double cover for this line ramifies."""
    return sum(1 << (k - 1) for k in range(1, 8) if k not in line)


def lines_independent(lines: Sequence[Sequence[int]]) -> bool:
    """Three lines give a fiber product with full group iff their characters are independent."""
    chars = [line_character(line) for line in lines]
    span = {0}
    for c in chars:
        if c in span:
            return False
        span |= {s ^ c for s in span}
    return True


def line_through(k: group.Subgroup, i: int, j: int) -> tuple[int, int, int]:
    return next(line for line in group.fano_lines(k) if i in line and j in line)


def fiber_product_model(mu: ModuliPoint, k: group.Subgroup) -> FiberProductModel:
    """Three elliptic double covers whose fiber product models the quotient by k.

    The lines are those through the index pairs (2,3), (1,2), (1,3).
    """
    if k == group.K:
        name = "K"
    elif k == group.KSTAR:
        name = "Kstar"
    else:
        raise group.GroupError("fiber_product_model supports K and K* only")
    lines = [line_through(k, *pair) for pair in ((2, 3), (1, 2), (1, 3))]
    comps = [EllipticModel.from_branch([mu.mu(c) for c in range(1, 8) if c not in line]) for line in lines]
    labels = ["T" + "".join(str(i) for i in pair) for pair in ((2, 3), (1, 2), (1, 3))]
    return FiberProductModel(name, lines, comps, labels)


# The published three-row display for the K* quotient, as branch labels.
PUBLISHED_KSTAR_ROWS = [[1, 4, 5, 6], [1, 4, 5, 6], [2, 3, 4, 6]]


def compare_kstar_display() -> dict:
    lines = group.fano_lines(group.KSTAR)
    row_lines = []
    for labels in PUBLISHED_KSTAR_ROWS:
        line = tuple(sorted(set(range(1, 8)) - set(labels)))
        row_lines.append(line if line in lines else None)
    repeated = [(a, b) for a, b in itertools.combinations(range(3), 2)
                if PUBLISHED_KSTAR_ROWS[a] == PUBLISHED_KSTAR_ROWS[b]]
    valid = [l is not None for l in row_lines]
    independent = all(valid) and lines_independent(row_lines)
    return {
        "rows_are_quotient_lines": valid,
        "repeated_rows": [[a + 1, b + 1] for a, b in repeated],
        "independent": independent,
        "derived_rows": [sorted(set(range(1, 8)) - set(l)) for l in
                         [line_through(group.KSTAR, *p) for p in ((2, 3), (1, 2), (1, 3))]],
    }


PUBLISHED_L_LABELS = [(1, 2), (1, 3), (1, 5), (2, 3), (1, 7), (3, 4), (4, 7)]


def compare_l_labels(k: group.Subgroup = group.K) -> dict:
    """Map each published L_ij label to the line through i, j and look for
    collisions and lines missing from the list."""
    by_label = {f"L{i}{j}": line_through(k, i, j) for i, j in PUBLISHED_L_LABELS}
    hit = set(by_label.values())
    collisions = {}
    for lab, line in by_label.items():
        collisions.setdefault(line, []).append(lab)
    return {
        "label_lines": {lab: list(line) for lab, line in by_label.items()},
        "coinciding": [labs for labs in collisions.values() if len(labs) > 1],
        "missing_lines": [list(l) for l in group.fano_lines(k) if l not in hit],
    }


def pullback_root_sets() -> list[frozenset]:
    """Branch sets of the mu0 fiber product pulled back by the A-map, as powers of zeta."""
    from fmcurve.moduli import mu0

    model = fiber_product_model(mu0(), group.K)
    inv = A_MAP.inverse()
    out = []
    for comp in model.components:
        pts = {inv(p) for p in comp.branch}
        out.append(frozenset(_zeta_exponent(p.value) for p in pts))
    return out


def _zeta_exponent(x: CycloElem) -> int:
    for k in range(7):
        if rho(k) == x:
            return k
    raise ValueError(f"{x} is not a seventh root of unity")


# root sets of the classical three-row fiber product over Q(zeta), as zeta exponents
CLASSICAL_ROOT_SETS = [frozenset({0, 3, 5, 6}), frozenset({2, 4, 5, 6}), frozenset({1, 3, 4, 5})]

