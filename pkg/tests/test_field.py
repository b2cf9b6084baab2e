import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from fmcurve.field import (ONE, ZERO, ZETA, CycloElem, cos_2pi_k_over_7, embed, random_elem, rho)

coeff = st.fractions(min_value=-50, max_value=50, max_denominator=12)
elems = st.lists(coeff, min_size=6, max_size=6).map(CycloElem)
nonzero = elems.filter(lambda a: not a.is_zero())

Z = cmath.exp(2j * cmath.pi / 7)


def to_complex(a):
    return sum(float(c) * Z**k for k, c in enumerate(a.coeffs))


@given(elems, elems, elems)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(nonzero)
def test_inverse(a):
    assert a * a.inv() == ONE
    assert a / a == ONE


@given(elems)
@settings(max_examples=50)
def test_json_roundtrip(a):
    assert CycloElem.from_json(a.to_json()) == a


def test_zeta_relations():
    assert ZETA**7 == ONE
    assert sum((rho(k) for k in range(7)), ZERO) == ZERO
    assert rho(-1) == rho(6)
    assert rho(7) == ONE


def test_conjugation_is_a_field_map():
    r = random.Random(1)
    a, b = random_elem(r), random_elem(r)
    for k in range(1, 7):
        assert (a * b).conjugate_by(k) == a.conjugate_by(k) * b.conjugate_by(k)
    assert rho(1).conjugate_by(3) == rho(3)


def test_norm_is_rational_and_multiplicative():
    r = random.Random(2)
    a, b = random_elem(r), random_elem(r)
    assert (a * b).norm() == a.norm() * b.norm()
    assert isinstance(a.norm(), Fraction)


def test_cosines_satisfy_cubic():
    # 2cos(2pi/7) is a root of c^3 + c^2 - 2c - 1
    c = 2 * cos_2pi_k_over_7(1)
    assert (c**3 + c**2 - 2 * c - 1).is_zero()
    assert c.is_rational() is False


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_from_json_rejects_floats():
    with pytest.raises(ValueError):
        CycloElem.from_json(0.5)
    with pytest.raises(ValueError):
        CycloElem.from_json([1, 0.5])
    with pytest.raises(ValueError):
        CycloElem.from_json([1] * 7)
    assert CycloElem.from_json("3/4") == CycloElem.coerce(Fraction(3, 4))


def test_embedding_matches_floats():
    r = random.Random(3)
    for _ in range(50):
        a = random_elem(r)
        e = embed(a, 64)
        assert abs(complex(e.value) - to_complex(a)) < 1e-9
        assert e.radius < 2.0**-60


def test_random_identities_against_embedding():
    r = random.Random(4)
    with mp.workprec(256):
        for _ in range(200):
            a, b = random_elem(r), random_elem(r)
            if b.is_zero():
                continue
            ea, eb = embed(a), embed(b)
            assert embed(a * b).close_to(ea.value * eb.value, 1e-30)
            assert embed(a / b).close_to(ea.value / eb.value, 1e-25)
