"""Noncommutative Minkowski algebra: defining relations, central elements,
coordinates, metric identity."""

from fractions import Fraction

import numpy as np

from qlorentz.fockrep import (pair_block, represent, represent_expr,
                              represent_float)
from qlorentz.qexpr import NormalForm, parse, parse_normal
from qlorentz.qminkowski import (QM_RELATIONS, coordinates, deformed_metric,
                                 invariant_length, lightcone_vector,
                                 metric_quadratic_form, minkowski_generators,
                                 q_trace, reassemble, iq_matrix)
from qlorentz.scalars import (MINUS_ONE, ONE, QValue, Q_MINUS_QINV,
                              SQRT2, Scalar)

NO = parse_normal
GENS = minkowski_generators()


def test_generator_normal_forms():
    assert GENS["A"] == NO("qpow(-1,1)*qpow(1,2)")
    assert GENS["B"] == NO("qpow(-1/2,1)*qpow(1/2,2)*ad1*a2")
    lam = Q_MINUS_QINV * Q_MINUS_QINV * Scalar.p_power(-2)
    assert GENS["C"] == NO("qpow(-1/2,1)*qpow(1/2,2)*ad2*a1") * (
        lam * Scalar.p_power(-2))
    # D is fully diagonal once the ladder pair is eliminated
    assert GENS["D"].is_diagonal()


def test_generators_against_naive_block_products():
    # independent oracle: evaluate the defining formulas factor by factor on
    # a cutoff space (bare ladder factors hop between graded blocks)
    from qlorentz.fockrep import CutoffSpace, expr_ladder_weight
    texts = {
        "A": "qpow(-1,1)*qpow(1,2)",
        "B": "qpow(-1/2,1)*qpow(1/2,2)*ad1*a2",
        "C": "(q - q^-1)^2*q^-1*ad2*a1*qpow(-1/2,1)*qpow(1/2,2)",
        "D": "(q - q^-1)^2*q^-1*ad2*a1*ad1*a2 + qpow(1,1)*qpow(-1,2)",
    }
    space = CutoffSpace((1, 2), 8)
    for k, text in texts.items():
        e = parse(text)
        cols = space.trusted_columns(expr_ladder_weight(e))
        naive = represent_expr(e, space).columns(cols)
        symbolic = represent(GENS[k], space).columns(cols)
        assert (naive - symbolic).is_zero(), k


def test_defining_relations_reduce_to_zero():
    for name, anchor, build in QM_RELATIONS:
        assert build(GENS).is_zero(), name


def test_relations_commute_classically():
    for name, anchor, build in QM_RELATIONS:
        assert build(GENS).eval_exact(1).is_zero(), name
    for a in "ABCD":
        for b in "ABCD":
            comm = (GENS[a] * GENS[b] - GENS[b] * GENS[a]).eval_exact(1)
            assert comm.is_zero(), (a, b)


def test_central_elements():
    L = invariant_length(GENS)
    trq = q_trace(GENS)
    for k in "ABCD":
        assert (L * GENS[k] - GENS[k] * L).is_zero()
        assert (trq * GENS[k] - GENS[k] * trq).is_zero()


def test_length_is_the_scalar_minus_q_minus_two():
    L = invariant_length(GENS)
    assert L == NormalForm.scalar(MINUS_ONE * Scalar.p_power(-4))


def test_length_on_block_is_scalar_multiple_of_identity_at_one():
    L = invariant_length(GENS)
    m = represent(L, pair_block(1), QValue(1))
    assert m.rows[0][0] == MINUS_ONE and m.rows[1][1] == MINUS_ONE
    assert m.rows[0][1].is_zero()


def test_q_trace_matches_trace_against_iq():
    # tr_q(K) = Tr(I_q K) with I_q = diag(q^-1, q) and K = [[A, B], [C, D]]
    iq = iq_matrix()
    expected = GENS["A"] * iq.rows[0][0] + GENS["D"] * iq.rows[1][1]
    assert (q_trace(GENS) - expected).is_zero()


def test_coordinate_round_trip():
    coords = coordinates(GENS)
    rebuilt = reassemble(coords)
    for k in "ABCD":
        assert (rebuilt[k] - GENS[k]).is_zero(), k


def test_time_coordinate_weights():
    # X0 carries A with weight 1/(sqrt2 q) and D with weight q/sqrt2
    coords = coordinates(GENS)
    expected = (GENS["A"] / (SQRT2 * Scalar.p_power(2))
                + GENS["D"] * Scalar.p_power(2) / SQRT2)
    assert (coords["X0"] - expected).is_zero()


def test_metric_identity_in_lightcone_basis():
    coords = coordinates(GENS)
    target = invariant_length(GENS) * (Scalar.p_power(4) + ONE)
    form = metric_quadratic_form(lightcone_vector(coords), row_first=True)
    assert (form - target).is_zero()


def test_metric_identity_fails_in_plain_cartesian_reading():
    coords = coordinates(GENS)
    target = invariant_length(GENS) * (Scalar.p_power(4) + ONE)
    cart = tuple(coords[k] for k in ("X0", "X1", "X2", "X3"))
    assert not (metric_quadratic_form(cart, True) - target).is_zero()
    assert not (metric_quadratic_form(cart, False) - target).is_zero()


def test_metric_matrix_entries():
    g = deformed_metric()
    q2 = Scalar.p_power(4)
    assert g.rows[0][1] == q2
    assert g.rows[1][0] == ONE
    assert g.rows[2][3] == MINUS_ONE and g.rows[3][2] == MINUS_ONE
    assert g.rows[3][3] == Scalar.p_power(2) * Q_MINUS_QINV
    zeros = [(0, 0), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3),
             (2, 0), (2, 1), (2, 2), (3, 0), (3, 1)]
    for i, j in zeros:
        assert g.rows[i][j].is_zero(), (i, j)


def test_metric_does_not_reduce_to_standard_form_at_one():
    g1 = deformed_metric().eval_exact(1)
    eta = [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    same = all(g1.rows[i][j] == Scalar.from_rational(eta[i][j])
               for i in range(4) for j in range(4))
    assert not same


def test_block_relations_at_sampled_points():
    for p in (Fraction(3, 2), Fraction(7, 5)):
        for n in (1, 4):
            block = pair_block(n)
            m = {k: represent(v, block) for k, v in GENS.items()}
            for name, anchor, build in QM_RELATIONS:
                assert build(m).eval_exact(p).is_zero(), (name, n, p)


def test_float_cross_check():
    p = 1.3
    q = p * p
    block = pair_block(4)
    m = {k: represent_float(v, block, p) for k, v in GENS.items()}
    assert np.linalg.norm(m["A"] @ m["C"] - q * q * m["C"] @ m["A"]) <= 1e-10
    coords = coordinates(GENS)
    y = [represent_float(v, block, p) for v in lightcone_vector(coords)]
    gm = deformed_metric()
    acc = np.zeros((block.dim, block.dim), dtype=complex)
    for i in range(4):
        for j in range(4):
            c = gm.rows[i][j]
            if not c.is_zero():
                acc += c.eval_float(p) * (y[i] @ y[j])
    target = (q * q + 1) * represent_float(invariant_length(GENS), block, p)
    assert np.linalg.norm(acc - target) <= 1e-10


def test_adjoint_structure_at_float_point():
    p, q = 1.3, 1.3 ** 2
    block = pair_block(3)
    a = represent_float(GENS["A"], block, p)
    d = represent_float(GENS["D"], block, p)
    b = represent_float(GENS["B"], block, p)
    c = represent_float(GENS["C"], block, p)
    assert np.linalg.norm(a - a.conj().T) <= 1e-10
    assert np.linalg.norm(d - d.conj().T) <= 1e-10
    lam = (q - 1 / q) ** 2 / q
    assert np.linalg.norm(c - lam * b.conj().T) <= 1e-10
    coords = coordinates(GENS)
    x0 = represent_float(coords["X0"], block, p)
    assert np.linalg.norm(x0 - x0.conj().T) <= 1e-10
    x1 = represent_float(coords["X1"], block, p)
    assert np.linalg.norm(x1 - x1.conj().T) > 1e-3
