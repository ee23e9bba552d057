"""Noncommutative Minkowski coordinate algebra from one pair of q-bosons:
the four generators A, B, C, D, their six defining exchange relations, the
central q-trace and invariant length, the map to real coordinates X^0..X^3,
and the deformed-metric quadratic form.

In this oscillator realization the invariant length is the scalar
L = -q^-2, so every quadratic-form identity reduces to an exact scalar
statement.  The printed metric matrix closes the identity in the light-cone
combination basis (X^1 + X^2, X^1 - X^2, (X^0 + X^3)/sqrt2,
(X^0 - X^3)/sqrt2); the naive Cartesian reading does not close and is
reproduced as a flagged entry.
"""

from __future__ import annotations

import numpy as np

from .scalars import (HALF, I, MINUS_ONE, ONE, Q_MINUS_QINV, SQRT2, TWO,
                      Scalar, p_power)
from .qexpr import NormalForm
from .fockrep import (ScalarMatrix, pair_block, represent, represent_float)
from .report import VerificationReport

_Q = p_power(2)
_QINV = p_power(-2)
_LAMBDA = Q_MINUS_QINV * Q_MINUS_QINV * _QINV      # (q - q^-1)^2 / q


def minkowski_generators() -> dict:
    """A = q^-(N1-N2); B = q^-(N1-N2)/2 a1+ a2;
    C = ((q-q^-1)^2/q) a2+ a1 q^-(N1-N2)/2;
    D = ((q-q^-1)^2/q) a2+ a1 a1+ a2 + q^(N1-N2)."""
    ad1 = NormalForm.generator("ad", 1)
    ad2 = NormalForm.generator("ad", 2)
    a1 = NormalForm.generator("a", 1)
    a2 = NormalForm.generator("a", 2)
    half_down = NormalForm.qpow(-1, 1) * NormalForm.qpow(1, 2)  # q^-(N1-N2)/2
    A = half_down * half_down
    B = half_down * ad1 * a2
    C = (ad2 * a1 * half_down) * _LAMBDA
    D = (ad2 * a1 * ad1 * a2) * _LAMBDA + A.inverse()
    return {"A": A, "B": B, "C": C, "D": D}


def q_trace(gens: dict) -> NormalForm:
    """tr_q = q^-1 A + q D, the trace against diag(q^-1, q)."""
    return gens["A"] * _QINV + gens["D"] * _Q


def invariant_length(gens: dict) -> NormalForm:
    """L = C B - q^-2 D A."""
    return gens["C"] * gens["B"] - gens["D"] * gens["A"] * (_QINV * _QINV)


def iq_matrix() -> ScalarMatrix:
    return ScalarMatrix.diagonal([_QINV, _Q])


QM_RELATIONS = (
    ("exchange-AC", "A C = q^2 C A",
     lambda g: g["A"] * g["C"] - g["C"] * g["A"] * _Q * _Q),
    ("exchange-AB", "A B = q^-2 B A",
     lambda g: g["A"] * g["B"] - g["B"] * g["A"] * _QINV * _QINV),
    ("center-AD", "A D = D A",
     lambda g: g["A"] * g["D"] - g["D"] * g["A"]),
    ("exchange-BD", "[B, D] = -((q - q^-1)/q) A B",
     lambda g: (g["B"] * g["D"] - g["D"] * g["B"]
                + g["A"] * g["B"] * (Q_MINUS_QINV * _QINV))),
    ("exchange-CD", "[C, D] = ((q - q^-1)/q) C A",
     lambda g: (g["C"] * g["D"] - g["D"] * g["C"]
                - g["C"] * g["A"] * (Q_MINUS_QINV * _QINV))),
    ("exchange-BC", "[B, C] = ((q - q^-1)/q)(A D - A^2)",
     lambda g: (g["B"] * g["C"] - g["C"] * g["B"]
                - (g["A"] * g["D"] - g["A"] * g["A"])
                * (Q_MINUS_QINV * _QINV))),
)


def coordinates(gens: dict) -> dict:
    """Invert the coordinate matrix
    [[ (sqrt2 q/2)(X0 - X3),  (sqrt2 q/(1-i))(X1 - X2) ],
     [ (sqrt2/((1+i)q))(X1 + X2),  (sqrt2/(2q))(X0 + X3) ]]."""
    A, B, C, D = gens["A"], gens["B"], gens["C"], gens["D"]
    inv_sqrt2 = SQRT2 * HALF                     # 1/sqrt2
    alpha = (ONE - I) / (TWO * SQRT2 * _Q)       # X1/X2 weight on B
    beta = (ONE + I) * _Q / (TWO * SQRT2)        # X1/X2 weight on C
    return {
        "X0": (A * _QINV + D * _Q) * inv_sqrt2,
        "X1": B * alpha + C * beta,
        "X2": B * (-alpha) + C * beta,
        "X3": (D * _Q - A * _QINV) * inv_sqrt2,
    }


def reassemble(coords: dict) -> dict:
    """Rebuild A, B, C, D from the coordinates (exact inverse pair)."""
    X0, X1, X2, X3 = (coords[k] for k in ("X0", "X1", "X2", "X3"))
    return {
        "A": (X0 - X3) * (SQRT2 * _Q * HALF),
        "B": (X1 - X2) * (SQRT2 * _Q / (ONE - I)),
        "C": (X1 + X2) * (SQRT2 / ((ONE + I) * _Q)),
        "D": (X0 + X3) * (SQRT2 / (TWO * _Q)),
    }


def deformed_metric() -> ScalarMatrix:
    """The printed deformed metric matrix."""
    z = Scalar.from_rational(0)
    g33 = _Q * Q_MINUS_QINV
    return ScalarMatrix([
        [z, _Q * _Q, z, z],
        [ONE, z, z, z],
        [z, z, z, MINUS_ONE],
        [z, z, MINUS_ONE, g33],
    ])


def lightcone_vector(coords: dict) -> tuple:
    """Combination basis in which the printed metric closes the length
    identity: (X1 + X2, X1 - X2, (X0 + X3)/sqrt2, (X0 - X3)/sqrt2)."""
    inv_sqrt2 = SQRT2 * HALF
    return (coords["X1"] + coords["X2"],
            coords["X1"] - coords["X2"],
            (coords["X0"] + coords["X3"]) * inv_sqrt2,
            (coords["X0"] - coords["X3"]) * inv_sqrt2)


def metric_quadratic_form(vec, row_first: bool = True) -> NormalForm:
    """sum_ij g_ij vec_i vec_j with the row index on the left (or the
    transposed reading)."""
    g = deformed_metric()
    out = NormalForm.zero()
    for i in range(4):
        for j in range(4):
            c = g.rows[i][j]
            if c.is_zero():
                continue
            prod = vec[i] * vec[j] if row_first else vec[j] * vec[i]
            out = out + prod * c
    return out


# ---------------------------------------------------------------------------
# Standalone checks and the suite
# ---------------------------------------------------------------------------

def verify_qm_relations() -> VerificationReport:
    """The six defining exchange relations, reduced symbolically."""
    report = VerificationReport(suite="minkowski-relations")
    gens = minkowski_generators()
    for name, anchor, build in QM_RELATIONS:
        res = build(gens)
        report.check(f"minkowski:{name}", res.is_zero(), anchor=anchor,
                     residual=str(res))
    return report


def central_elements_check() -> VerificationReport:
    """Centrality of the q-trace and the invariant length."""
    report = VerificationReport(suite="minkowski-central")
    gens = minkowski_generators()
    for label, central in (("q-trace", q_trace(gens)),
                           ("length", invariant_length(gens))):
        for k in "ABCD":
            res = central * gens[k] - gens[k] * central
            report.check(f"minkowski:central-{label}-{k}", res.is_zero(),
                         anchor=f"[{label}, {k}] = 0", residual=str(res))
    return report


def metric_form_check() -> VerificationReport:
    """The quadratic-form identity for the invariant length, in the basis
    where it closes, plus the flagged Cartesian readings."""
    report = VerificationReport(suite="minkowski-metric")
    gens = minkowski_generators()
    coords = coordinates(gens)
    target = invariant_length(gens) * (_Q * _Q + ONE)
    res = metric_quadratic_form(lightcone_vector(coords)) - target
    report.check("minkowski:metric-identity-lightcone", res.is_zero(),
                 anchor="(q^2 + 1) L = g_ij X^i X^j in the light-cone "
                 "combination basis", residual=str(res))
    cart = tuple(coords[k] for k in ("X0", "X1", "X2", "X3"))
    for tag, row_first in (("rows", True), ("columns", False)):
        res = metric_quadratic_form(cart, row_first) - target
        report.check(f"minkowski:metric-identity-cartesian-{tag}",
                     res.is_zero(), expected_failure=True,
                     anchor="plain coordinate ordering",
                     residual="does not reduce to (q^2 + 1) L")
    return report


def verify_minkowski_suite(config) -> VerificationReport:
    report = VerificationReport(suite="minkowski", config=config.as_dict())
    backends = config.backends
    gens = minkowski_generators()
    L = invariant_length(gens)
    trq = q_trace(gens)
    coords = coordinates(gens)

    if "symbolic" in backends:
        for name, anchor, build in QM_RELATIONS:
            res = build(gens)
            report.check(f"minkowski:{name}", res.is_zero(), anchor=anchor,
                         residual=str(res))
        for name, anchor, build in QM_RELATIONS:
            res = build(gens).eval_exact(1)
            report.check(f"minkowski:{name}-classical", res.is_zero(),
                         anchor="all exchange relations commute at q = 1",
                         p=1, residual=str(res))

        for label, central in (("q-trace", trq), ("length", L)):
            for k in ("A", "B", "C", "D"):
                res = central * gens[k] - gens[k] * central
                report.check(f"minkowski:central-{label}-{k}",
                             res.is_zero(),
                             anchor=f"[{label}, {k}] = 0",
                             residual=str(res))

        scalar_L = NormalForm.scalar(MINUS_ONE * _QINV * _QINV)
        report.check("minkowski:length-scalar-value",
                     (L - scalar_L).is_zero(),
                     anchor="the oscillator realization pins L = -q^-2",
                     residual=str(L))

        rebuilt = reassemble(coords)
        ok = all((rebuilt[k] - gens[k]).is_zero() for k in gens)
        report.check("minkowski:coordinate-round-trip", ok,
                     anchor="generators -> coordinates -> generators is the "
                     "identity", residual="round trip failed")

        # metric identity, light-cone combination basis
        lhs = metric_quadratic_form(lightcone_vector(coords), row_first=True)
        target = L * (_Q * _Q + ONE)
        res = lhs - target
        report.check("minkowski:metric-identity-lightcone", res.is_zero(),
                     anchor="(q^2 + 1) L = g_ij X^i X^j in the light-cone "
                     "combination basis", residual=str(res))
        # constant-normalization comparison between the two length forms
        if lhs.is_scalar() and not lhs.is_zero():
            ratio = lhs.scalar_part() * (L * (_Q * _Q + ONE)).scalar_part().inverse()
            report.add("minkowski:length-normalization",
                       anchor="quadratic form fixes the length "
                       "normalization",
                       status="pass" if ratio.is_one() else "fail",
                       residual=f"form/(q^2+1)L = {ratio}")

        # the naive Cartesian reading does not close; reproduce and flag
        cart = (coords["X0"], coords["X1"], coords["X2"], coords["X3"])
        res_row = metric_quadratic_form(cart, row_first=True) - target
        report.check("minkowski:metric-identity-cartesian-rows",
                     res_row.is_zero(),
                     anchor="printed metric against the plain coordinate "
                     "ordering (X0, X1, X2, X3)",
                     expected_failure=True,
                     residual="does not reduce to (q^2 + 1) L; the identity "
                     "closes in the light-cone combination basis")
        res_col = metric_quadratic_form(cart, row_first=False) - target
        report.check("minkowski:metric-identity-cartesian-columns",
                     res_col.is_zero(),
                     anchor="transposed index reading of the same sum",
                     expected_failure=True,
                     residual="does not reduce to (q^2 + 1) L either")

        g1 = deformed_metric().eval_exact(1)
        eta = ScalarMatrix.diagonal([ONE, MINUS_ONE, MINUS_ONE, MINUS_ONE])
        report.check("minkowski:classical-metric-shape",
                     not (g1 - eta).is_zero(),
                     anchor="the deformed metric does not reduce to "
                     "diag(1,-1,-1,-1) at q = 1",
                     residual="unexpectedly equals the standard form")

    if "exact" in backends:
        ps = [p for p in config.p_values if p != 1]
        for n in range(0, config.max_block + 1):
            block = pair_block(n)
            m = {k: represent(v, block) for k, v in gens.items()}
            for name, anchor, build in QM_RELATIONS:
                res = build(m)
                for p in ps:
                    report.check(f"minkowski:{name}",
                                 res.eval_exact(p).is_zero(),
                                 anchor=anchor, backend="exact",
                                 block=block.label(), p=p,
                                 residual="nonzero matrix")

    if "float" in backends:
        float_entries(report, gens, coords, L,
                      float(config.float_p), config.max_block)

    return report


def float_entries(report, gens, coords, L, p: float, max_block: int) -> None:
    """Float cross-checks in the symmetric backend at one numeric point:
    relation residuals, the metric identity, and the adjoint structure."""
    tol = 1e-10
    q = p * p
    lam = (q - 1.0 / q) ** 2 / q
    blocks = [pair_block(n) for n in range(1, min(max_block, 6) + 1)]
    for block in blocks:
        m = {k: represent_float(v, block, p) for k, v in gens.items()}

        def chk(name, resid):
            r = float(np.linalg.norm(resid))
            report.check(f"minkowski:{name}", r <= tol, backend="float",
                         block=block.label(), p=p,
                         residual=f"frobenius={r:.3e}")

        chk("exchange-AC", m["A"] @ m["C"] - q * q * m["C"] @ m["A"])
        chk("exchange-AB", m["A"] @ m["B"] - m["B"] @ m["A"] / (q * q))
        chk("center-AD", m["A"] @ m["D"] - m["D"] @ m["A"])
        chk("exchange-BD", m["B"] @ m["D"] - m["D"] @ m["B"]
            + (q - 1 / q) / q * m["A"] @ m["B"])
        chk("exchange-CD", m["C"] @ m["D"] - m["D"] @ m["C"]
            - (q - 1 / q) / q * m["C"] @ m["A"])
        chk("exchange-BC", m["B"] @ m["C"] - m["C"] @ m["B"]
            - (q - 1 / q) / q * (m["A"] @ m["D"] - m["A"] @ m["A"]))

        # metric identity in the light-cone basis, float twin
        y = [represent_float(v, block, p) for v in
             lightcone_vector(coords)]
        gm = deformed_metric()
        acc = np.zeros((block.dim, block.dim), dtype=complex)
        for i in range(4):
            for j in range(4):
                c = gm.rows[i][j]
                if not c.is_zero():
                    acc = acc + c.eval_float(p) * (y[i] @ y[j])
        target = (q * q + 1) * represent_float(L, block, p)
        chk("metric-identity-lightcone", acc - target)

        # adjoint structure: A, D and the time/longitudinal coordinates are
        # self-adjoint; B and C interchange up to the explicit scalar
        chk("adjoint-A", m["A"] - m["A"].conj().T)
        chk("adjoint-D", m["D"] - m["D"].conj().T)
        chk("adjoint-BC", m["C"] - lam * m["B"].conj().T)
        x0 = represent_float(coords["X0"], block, p)
        x3 = represent_float(coords["X3"], block, p)
        chk("adjoint-X0", x0 - x0.conj().T)
        chk("adjoint-X3", x3 - x3.conj().T)
        x1 = represent_float(coords["X1"], block, p)
        defect = float(np.linalg.norm(x1 - x1.conj().T))
        report.check("minkowski:adjoint-X1", defect <= tol,
                     anchor="transverse coordinates are self-adjoint only "
                     "up to q-dependent weights in this realization",
                     backend="float", block=block.label(), p=p,
                     expected_failure=True,
                     residual=f"hermiticity defect frobenius={defect:.3e}")
