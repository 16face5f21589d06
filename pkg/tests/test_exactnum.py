from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aperyfib.exactnum import (
    ALPHA,
    BETA,
    ONE,
    ZERO,
    QuadRat,
    qr_add,
    qr_inv,
    qr_mul,
    qr_normalize,
    qr_sign,
    qr_to_decimal,
    rat_to_sci,
)


def triple(q):
    return (q.a, q.b, q.d)


def ref_decimal(a, b, d, digits):
    # independent route: decimal square root, rounding half away from zero
    with localcontext() as ctx:
        ctx.prec = digits + 60
        v = (Decimal(a) + Decimal(b) * Decimal(5).sqrt()) / Decimal(d)
        text = str(v.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_UP))
    return text.lstrip("-") if set(text) <= set("-0.") else text


@pytest.mark.parametrize(
    "raw, canon",
    [((2, 2, 4), (1, 1, 2)), ((7, -3, -2), (-7, 3, 2)), ((0, 0, 5), (0, 0, 1))],
)
def test_normalize(raw, canon):
    assert triple(qr_normalize(*raw)) == canon


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        qr_normalize(1, 1, 0)


def test_add_examples():
    assert triple(qr_add(ALPHA, BETA)) == (1, 0, 1)
    alpha4 = ALPHA * ALPHA * ALPHA * ALPHA
    assert triple(alpha4) == (7, 3, 2)
    assert triple(qr_add(ONE, alpha4)) == (9, 3, 2)
    x = QuadRat(3, -4, 7)
    assert qr_add(x, ZERO) == x


def test_mul_examples():
    assert triple(qr_mul(ALPHA, BETA)) == (-1, 0, 1)
    # (1 + r)^2 / 4 = (6 + 2r) / 4
    assert triple(qr_mul(ALPHA, ALPHA)) == (3, 1, 2)
    x = QuadRat(3, -4, 7)
    assert qr_mul(x, ONE) == x


def test_inv_examples():
    assert qr_inv(ALPHA) == -BETA
    assert qr_mul(ALPHA, -BETA) == ONE
    assert triple(qr_inv(QuadRat(2, 0, 1))) == (1, 0, 2)
    assert triple(qr_inv(QuadRat(0, 1, 1))) == (0, 1, 5)
    with pytest.raises(ZeroDivisionError):
        qr_inv(ZERO)


@pytest.mark.parametrize("x, s", [((1, -1, 2), -1), ((0, 0, 1), 0), ((7, -3, 1), 1), ((-7, 3, 1), -1), ((2, -1, 1), -1)])
def test_sign_examples(x, s):
    assert qr_sign(QuadRat(*x)) == s


@pytest.mark.parametrize(
    "x, digits, text",
    [((7, -1, 2), 9, "2.381966011"), ((5, -1, 2), 6, "1.381966"), ((1, 0, 8), 5, "0.12500")],
)
def test_decimal_examples(x, digits, text):
    assert qr_to_decimal(QuadRat(*x), digits) == text


def test_decimal_negative_and_rational():
    assert qr_to_decimal(BETA, 6) == ref_decimal(1, -1, 2, 6)
    assert qr_to_decimal(Fraction(-1, 3), 4) == "-0.3333"


def test_text_rendering():
    assert str(QuadRat(7, -1, 2)) == "(7-1*sqrt(5))/2"
    assert str(QuadRat(1, 0, 8)) == "(1+0*sqrt(5))/8"


def test_rat_to_sci():
    assert rat_to_sci(Fraction(1, 8)) == "1.25000e-1"
    assert rat_to_sci(Fraction(999999999, 10**12), sig=3) == "1.00e-3"
    assert rat_to_sci(Fraction(-3, 1)) == "-3.00000e+0"


def test_rational_equality_and_hash():
    assert QuadRat(3, 0, 6) == Fraction(1, 2)
    assert hash(QuadRat(3, 0, 6)) == hash(Fraction(1, 2))
    assert QuadRat(1, 1, 2) != Fraction(1, 2)


ints = st.integers(min_value=-10**12, max_value=10**12)
dens = st.integers(min_value=1, max_value=10**6)
quads = st.builds(QuadRat, ints, ints, dens)
nonzero = quads.filter(bool)


@settings(max_examples=200)
@given(quads, quads, quads)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(nonzero)
def test_inverse_and_sign(x):
    assert x * qr_inv(x) == ONE
    assert qr_sign(x) * qr_sign(qr_inv(x)) == 1


@given(quads)
def test_canonical_idempotent(x):
    assert triple(qr_normalize(*triple(x))) == triple(x)
    assert x.d > 0


@given(st.fractions(max_denominator=10**6), st.fractions(max_denominator=10**6))
def test_rational_embedding(p, q):
    P, Q = QuadRat.from_rational(p), QuadRat.from_rational(q)
    assert (P + Q).to_fraction() == p + q
    assert (P * Q).to_fraction() == p * q
    if q:
        assert (P / Q).to_fraction() == p / q


@given(quads)
def test_sign_matches_decimal_oracle(x):
    with localcontext() as ctx:
        ctx.prec = 80
        v = Decimal(x.a) + Decimal(x.b) * Decimal(5).sqrt()
    assert qr_sign(x) == (v > 0) - (v < 0)


@settings(max_examples=200)
@given(ints, ints, dens, st.integers(min_value=1, max_value=40))
def test_decimal_matches_oracle(a, b, d, digits):
    q = QuadRat(a, b, d)
    assert qr_to_decimal(q, digits) == ref_decimal(q.a, q.b, q.d, digits)
