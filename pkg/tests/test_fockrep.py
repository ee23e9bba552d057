"""Exact Fock-block representations: both backends, grading, spectral
calculus, cross-backend equivalence."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from qlorentz.fockrep import (CutoffSpace, GradingError, ScalarMatrix,
                              equivalence_check, expr_ladder_weight,
                              lorentz_block, number_matrix, pair_block,
                              represent, represent_expr, represent_expr_float,
                              represent_float, spectral_function)
from qlorentz.qexpr import NormalForm, parse, parse_normal
from qlorentz.scalars import ONE, QValue, Q_MINUS_QINV, Scalar, qnum_at

NO = parse_normal
P32 = QValue(Fraction(3, 2))


def test_block_basis_ordering():
    b = pair_block(1)
    assert b.states == [(1, 0), (0, 1)]
    assert b.dim == 2
    b2 = pair_block(3)
    assert b2.states[0] == (3, 0) and b2.states[-1] == (0, 3)
    lb = lorentz_block(1, 1)
    assert lb.dim == 4
    assert lb.states[0] == (1, 0, 1, 0)


def test_diagonal_qpower_on_block():
    m = represent(NO("qpow(1,1)"), pair_block(1))
    assert m.rows[0][0] == Scalar.p_power(2)
    assert m.rows[1][1] == ONE
    assert m.rows[0][1].is_zero() and m.rows[1][0].is_zero()


def test_raising_bilinear_single_entry():
    m = represent(NO("ad1*a2"), pair_block(1))
    # only <1,0| J+ |0,1> = [1] = 1 survives
    assert m.rows[0][1] == ONE
    assert m.rows[0][0].is_zero() and m.rows[1][1].is_zero()
    assert m.rows[1][0].is_zero()


def test_ladder_commutator_matrix_equals_qinteger():
    b = pair_block(1)
    jp = represent(NO("ad1*a2"), b)
    jm = represent(NO("ad2*a1"), b)
    comm = jp * jm - jm * jp
    assert comm == ScalarMatrix.diagonal([ONE, -ONE])
    rhs = represent((NormalForm.diagonal((2, -2, 0, 0))
                     - NormalForm.diagonal((-2, 2, 0, 0))) / Q_MINUS_QINV, b)
    assert (comm - rhs).is_zero()


def test_defining_relations_exact_both_backends():
    for text in ("a1*ad1 - q^-1*ad1*a1 - qpow(1,1)",
                 "a1*ad1 - q*ad1*a1 - qpow(-1,1)"):
        e = parse(text)
        space = CutoffSpace((1,), 9)
        cols = space.trusted_columns(expr_ladder_weight(e))
        for p in (Fraction(1), Fraction(3, 2), Fraction(7, 5)):
            m = represent_expr(e, space, QValue(p)).columns(cols)
            assert m.is_zero()
        for p in (1.0, 1.5, 1.4):
            mf = represent_expr_float(e, space, p)[:, cols]
            assert np.linalg.norm(mf) <= 1e-10


def test_representation_is_a_homomorphism():
    rng = random.Random(5)
    atoms = ["ad1*a2", "ad2*a1", "qpow(1/2,1)*ad1*a1", "qpow(-1,2)",
             "qnum(2)*ad2*a2"]
    for _ in range(25):
        x = NO(rng.choice(atoms)) + NO(rng.choice(atoms))
        y = NO(rng.choice(atoms)) * NO(rng.choice(atoms))
        for n in range(0, 5):
            b = pair_block(n)
            assert (represent(x * y, b)
                    - represent(x, b) * represent(y, b)).is_zero()


def test_backends_are_conjugate_by_qfactorial_weights():
    nf = NO("ad1*a2 + qpow(1/2,1)*a1*ad1 - qnum(2)*ad2*a1")
    p = 1.3
    q = p * p

    def fnum(n):
        return (q ** n - q ** (-n)) / (q - 1 / q)

    for n in range(0, 6):
        b = pair_block(n)
        shift = represent(nf, b).to_complex(p)
        sym = represent_float(nf, b, p)
        d = []
        for s in b.states:
            prod = 1.0
            for occ in s:
                for k in range(1, occ + 1):
                    prod *= fnum(k)
            d.append(math.sqrt(prod))
        D = np.diag(d)
        assert np.linalg.norm(D @ shift @ np.linalg.inv(D) - sym) <= 1e-10


def test_grading_violation_raises():
    with pytest.raises(GradingError):
        represent(NO("a1"), pair_block(2))
    with pytest.raises(GradingError):
        represent(NO("ad1*ad2"), pair_block(2))
    with pytest.raises(ValueError):
        represent(NO("ad3*a4"), pair_block(2))   # modes absent from block
    # but the same operator is fine on the cutoff embedding
    m = represent(NO("a1"), CutoffSpace((1, 2), 3), allow_nonconserving=True)
    assert not m.is_zero()


def test_number_matrix():
    b = pair_block(2)
    n1 = number_matrix(b, 1)
    assert [n1.rows[i][i] for i in range(3)] == [
        Scalar.from_rational(2), ONE, Scalar.from_rational(0)]


def test_block_evaluation_handles_removable_poles_at_one():
    nf = (NormalForm.diagonal((2, -2, 0, 0))
          - NormalForm.diagonal((-2, 2, 0, 0))) / Q_MINUS_QINV
    m = represent(nf, pair_block(2), QValue(1))
    assert m == ScalarMatrix.diagonal(
        [Scalar.from_rational(2), Scalar.from_rational(0),
         Scalar.from_rational(-2)])


def test_spectral_function_identity_and_diagonal():
    m = np.diag([2.0, -2.0]).astype(complex)
    out = spectral_function(m, lambda x: x)
    assert np.linalg.norm(out - m) <= 1e-12
    q = Fraction(9, 4)
    qf = float(q)

    def fnum(x):
        return (qf ** x.real - qf ** (-x.real)) / (qf - 1 / qf)

    out = spectral_function(m, fnum)
    expected = float(qnum_at(2, QValue(Fraction(3, 2))))
    assert out[0, 0].real == pytest.approx(expected, rel=1e-12)
    assert out[1, 1].real == pytest.approx(-expected, rel=1e-12)


def test_spectral_function_rejects_defective_matrices():
    defective = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)
    with pytest.raises(ArithmeticError):
        spectral_function(defective, lambda x: x)


def test_equivalence_check_oracle():
    rep = equivalence_check(
        NO("a1*ad1"), NO("q^-1*ad1*a1 + qpow(1,1)"),
        [pair_block(n) for n in range(5)],
        (P32, QValue(1)))
    assert rep.ok
    rep = equivalence_check(NO("ad1*a2"), NO("ad1*a2"), [pair_block(3)])
    assert rep.ok
    rep = equivalence_check(
        NO("[ad1*a2, ad2*a1]"),
        (NormalForm.diagonal((2, -2, 0, 0))
         - NormalForm.diagonal((-2, 2, 0, 0))) / Q_MINUS_QINV,
        [pair_block(n) for n in range(7)], (P32,))
    assert rep.ok


def test_equivalence_check_reports_failures_as_data():
    rep = equivalence_check(NO("ad1*a2"), NO("ad2*a1"), [pair_block(1)])
    assert not rep.ok
    assert rep.summary["fail"] >= 1


def test_total_number_projector_commutes_with_generators():
    # conserving generators never connect different graded blocks, which is
    # exactly what represent() enforces; a direct cutoff-space check
    space = CutoffSpace((1, 2), 5)
    proj = {}
    for i, s in enumerate(space.states):
        proj.setdefault(sum(s), []).append(i)
    nf = NO("ad1*a2 + qnum(2)*ad2*a1 + qpow(1/2,1)")
    m = represent(nf, space, allow_nonconserving=True)
    for i in range(space.dim):
        for j in range(space.dim):
            if sum(space.states[i]) != sum(space.states[j]):
                assert m.rows[i][j].is_zero()
