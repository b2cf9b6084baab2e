"""Exact arithmetic in the seventh cyclotomic field Q(zeta), zeta = exp(2*pi*i/7).

Elements are stored in the power basis {1, zeta, ..., zeta^5} as six integer
numerators over one positive common denominator.  Equality is exact
coefficient comparison; the complex embedding exists for cross-checks only.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Union

from mpmath import iv, mp, mpc

DEGREE = 6

Scalar = Union[int, Fraction]


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = den
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            break
    if g > 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


def _fold(poly: Sequence[int]) -> list[int]:
    """Reduce an integer polynomial modulo zeta^7 - 1 and then Phi_7."""
    out = [0] * 7
    for k, c in enumerate(poly):
        out[k % 7] += c
    top = out[6]
    return [c - top for c in out[:6]]


class CycloElem:
    """An element c0 + c1*zeta + ... + c5*zeta^5 of Q(zeta_7)."""

    __slots__ = ("_nums", "_den", "_hash")

    def __init__(self, coeffs: Iterable[Scalar | str] = (), _raw: tuple | None = None):
        if _raw is not None:
            self._nums, self._den = _raw
        else:
            fr = [Fraction(c) for c in coeffs]
            if len(fr) > DEGREE:
                raise ValueError("use CycloElem.from_poly for degree > 5")
            fr += [Fraction(0)] * (DEGREE - len(fr))
            den = 1
            for f in fr:
                den = den * f.denominator // gcd(den, f.denominator)
            self._nums, self._den = _normalize([int(f * den) for f in fr], den)
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def _make(cls, nums: Sequence[int], den: int) -> "CycloElem":
        return cls(_raw=_normalize(nums, den))

    @classmethod
    def from_poly(cls, coeffs: Sequence[Scalar]) -> "CycloElem":
        """Element sum c_k zeta^k for any number of coefficients."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls._make(_fold([int(f * den) for f in fr]), den)

    @classmethod
    def zeta_power(cls, k: int) -> "CycloElem":
        poly = [0] * 7
        poly[k % 7] = 1
        return cls._make(_fold(poly), 1)

    @classmethod
    def coerce(cls, x: "CycloElem | Scalar") -> "CycloElem":
        if isinstance(x, CycloElem):
            return x
        if isinstance(x, (int, Fraction)):
            f = Fraction(x)
            return cls._make([f.numerator, 0, 0, 0, 0, 0], f.denominator)
        return NotImplemented

    # -- accessors --------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = CycloElem.coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._den, other._den
        return CycloElem._make(
            [x * b + y * a for x, y in zip(self._nums, other._nums)], a * b
        )

    __radd__ = __add__

    def __neg__(self) -> "CycloElem":
        return CycloElem(_raw=(tuple(-n for n in self._nums), self._den))

    def __sub__(self, other):
        other = CycloElem.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = CycloElem.coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * 11
        for i, x in enumerate(self._nums):
            if x:
                for j, y in enumerate(other._nums):
                    if y:
                        prod[i + j] += x * y
        return CycloElem._make(_fold(prod), self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> "CycloElem":
        """Multiplicative inverse by the extended Euclidean algorithm against Phi_7."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_7)")
        s = _poly_inverse_mod_phi7([Fraction(n, self._den) for n in self._nums])
        return CycloElem.from_poly(s)

    def __truediv__(self, other):
        other = CycloElem.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return CycloElem.coerce(other) * self.inv()

    def __pow__(self, n: int) -> "CycloElem":
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate_by(self, k: int) -> "CycloElem":
        """Galois image under zeta -> zeta^k (k prime to 7)."""
        if k % 7 == 0:
            raise ValueError("k must be prime to 7")
        poly = [0] * 7
        for i, n in enumerate(self._nums):
            poly[(i * k) % 7] += n
        return CycloElem._make(_fold(poly), self._den)

    def norm(self) -> Fraction:
        x = self
        for k in range(2, 7):
            x = x * self.conjugate_by(k)
        assert x.is_rational()
        return x.coeffs[0]

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem):
            other = CycloElem.coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self._nums == other._nums and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nums, self._den))
        return self._hash

    def sort_key(self) -> tuple:
        return tuple(self.coeffs)

    def __repr__(self) -> str:
        return f"CycloElem({self})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c) if not mono else (f"({c})" if c.denominator != 1 else str(c))
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -- serialization ----------------------------------------------------
    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "CycloElem":
        if isinstance(data, (int, str)):
            return cls.coerce(Fraction(data))
        if isinstance(data, float):
            raise ValueError("floats are not exact; give a string like '3/4'")
        if not isinstance(data, list) or not 1 <= len(data) <= DEGREE:
            raise ValueError(f"expected a list of at most 6 rationals, got {data!r}")
        return cls([Fraction(c) if not isinstance(c, float) else _reject_float(c) for c in data])

    # -- complex embedding (oracle channel) ------------------------------
    def embed(self, precision: int = 128) -> "Embedding":
        return embed(self, precision)


def _reject_float(x):
    raise ValueError(f"float coefficient {x!r} is not exact")


# ---------------------------------------------------------------------------
# polynomial helpers over Q (coefficient lists, lowest degree first)

PHI7 = [Fraction(1)] * 7


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        _trim(a)
    return q, a


def _poly_sub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        for j, y in enumerate(b):
            out[i + j] -= x * y
    return _trim(out)


def _poly_inverse_mod_phi7(a: list[Fraction]) -> list[Fraction]:
    r0, r1 = list(PHI7), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    # Phi_7 is irreducible, so the last nonzero remainder is a constant
    c = r1[0]
    return [x / c for x in s1]


# ---------------------------------------------------------------------------

ZERO = CycloElem()
ONE = CycloElem([1])
ZETA = CycloElem.zeta_power(1)


def rho(k: int = 1) -> CycloElem:
    """zeta^k, reduced."""
    return CycloElem.zeta_power(k)


def cos_2pi_k_over_7(k: int) -> CycloElem:
    """cos(2*pi*k/7) = (zeta^k + zeta^-k)/2, exactly."""
    return (rho(k) + rho(-k)) * Fraction(1, 2)


class Embedding(NamedTuple):
    """Complex approximation with a rigorous absolute error radius."""

    value: mpc
    radius: Fraction | float

    def close_to(self, other: "Embedding | complex", slack: float = 0.0) -> bool:
        with mp.workprec(max(mp.prec, 256)):
            if isinstance(other, Embedding):
                return abs(self.value - other.value) <= self.radius + other.radius + slack
            return abs(self.value - other) <= self.radius + slack


def embed(a: CycloElem, precision: int = 128) -> Embedding:
    """Evaluate a at zeta = exp(2*pi*i/7) with interval arithmetic.

    The returned radius bounds |approx - exact| and is far below 2^(-precision/2)
    for coefficients of moderate height.
    """
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")
    old = iv.prec
    iv.prec = precision + 32
    try:
        re = iv.mpf(0)
        im = iv.mpf(0)
        two_pi_7 = 2 * iv.pi / 7
        for k, c in enumerate(a.coeffs):
            if c == 0:
                continue
            ci = iv.mpf(c.numerator) / c.denominator
            re += ci * iv.cos(two_pi_7 * k)
            im += ci * iv.sin(two_pi_7 * k)
        with mp.workprec(precision + 32):
            value = mpc(re.mid, im.mid)
            radius = float(abs(mpc(re.delta, im.delta))) * 0.5000001
    finally:
        iv.prec = old
    return Embedding(value, radius)


def random_elem(rng: random.Random, height: int = 9, den: int = 5) -> CycloElem:
    return CycloElem(
        Fraction(rng.randint(-height, height), rng.randint(1, den)) for _ in range(DEGREE)
    )


def random_rational(rng: random.Random, height: int = 30, den: int = 7) -> CycloElem:
    return CycloElem.coerce(Fraction(rng.randint(-height, height), rng.randint(1, den)))
