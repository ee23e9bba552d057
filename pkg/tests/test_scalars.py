"""Exact scalar field: field axioms, q-integers, evaluation."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlorentz.scalars import (EvaluationPoleError, I, LaurentPoly, MINUS_ONE,
                              ONE, P, Q, QINV, Q_MINUS_QINV, QValue, SQRT2,
                              Scalar, TWO, ZERO, eval_float, qnum, qnum_at)

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def polys(draw):
    coeffs = draw(st.dictionaries(st.integers(-3, 3), small_fractions,
                                  max_size=4))
    return LaurentPoly(coeffs)


@st.composite
def scalars(draw):
    return Scalar(
        *(Scalar.from_poly(draw(polys())).re for _ in range(4)))


def test_difference_of_squares():
    assert (P + P.inverse()) * (P - P.inverse()) == Q - QINV


def test_complex_unit():
    assert (ONE + I) * (ONE - I) == TWO
    assert I * I == MINUS_ONE


def test_sqrt2_adjunction():
    assert SQRT2 * SQRT2 / TWO == ONE


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=50, deadline=None)
@given(scalars())
def test_multiplicative_inverse(z):
    if z.is_zero():
        with pytest.raises(ZeroDivisionError):
            z.inverse()
    else:
        assert z * z.inverse() == ONE


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@pytest.mark.parametrize("n", range(-32, 33))
def test_qnum_times_denominator(n):
    assert qnum(n) * Q_MINUS_QINV == Scalar.p_power(2 * n) - Scalar.p_power(-2 * n)


def test_qnum_symmetry_and_classical_limit():
    for n in range(0, 20):
        assert qnum(-n) == -qnum(n)
        assert qnum_at(n, QValue(1)) == n


def test_qnum_two():
    assert qnum(2) == Q + QINV


def test_qnum_three_at_rational_point():
    # independent oracle: [3] = q^2 + 1 + q^-2 by plain Fraction arithmetic
    q = Fraction(9, 4)
    expected = q ** 2 + 1 + q ** -2
    assert expected == Fraction(8113, 1296)
    assert qnum_at(3, QValue(Fraction(3, 2))) == expected


def test_qnum_is_polynomial_so_p_one_is_valid():
    val = qnum(5).eval_exact(1)
    assert val == Scalar.from_rational(5)


def test_eval_float_basics():
    assert eval_float(qnum(2), 1.0) == pytest.approx(2.0)
    assert eval_float(I * I, 2.0) == pytest.approx(-1.0)
    v = eval_float(Q - QINV, math.sqrt(1.5))
    assert v == pytest.approx(1.5 - 1 / 1.5, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars())
def test_eval_float_is_a_homomorphism(a, b):
    p = 1.17
    fa, fb = a.eval_float(p), b.eval_float(p)
    assert (a + b).eval_float(p) == pytest.approx(fa + fb, rel=1e-12, abs=1e-12)
    scale = max(1.0, abs(fa * fb))
    assert abs((a * b).eval_float(p) - fa * fb) <= 1e-12 * scale


def test_pole_detection():
    frac = ONE / Q_MINUS_QINV
    with pytest.raises(EvaluationPoleError):
        frac.eval_exact(1)
    with pytest.raises(EvaluationPoleError):
        frac.eval_float(1.0)


def test_removable_pole_cancels_through_reduction():
    # (q^2 - q^-2)/(q - q^-1) reduces to q + q^-1, evaluable at p = 1
    ratio = (Scalar.p_power(4) - Scalar.p_power(-4)) / Q_MINUS_QINV
    assert ratio == qnum(2)
    assert ratio.eval_exact(1) == TWO


def test_qvalue_validation():
    with pytest.raises(ValueError):
        QValue(0)
    assert QValue(Fraction(3, 2)).q == Fraction(9, 4)


def test_canonical_printing_orders_exponents_ascending():
    s = Scalar.p_power(2) + Scalar.p_power(-2) + ONE
    assert str(s) == "p^-2 + 1 + p^2"
    assert str(P) == "p"
    assert str(ZERO) == "0"


def test_exact_evaluation_keeps_extension_components():
    z = I * Q + SQRT2
    v = z.eval_exact(Fraction(3, 2))
    assert v.rt.num.as_fraction_dict() == {0: Fraction(1)}
    assert v.im.num.as_fraction_dict() == {0: Fraction(9, 4)}
