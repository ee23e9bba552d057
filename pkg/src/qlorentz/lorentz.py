"""Chiral q-deformed Lorentz algebra from two commuting SU_q(2) copies:
rotation and boost combinations with their deformed commutator table, the
4-dimensional fundamental representation, and the Hopf structure with full
axiom checks.

The unbarred copy lives on modes (1,2), the barred copy on modes (3,4).
Diagonal generators are carried in exponentiated form for deformed checks;
their linear (number-operator) form exists only on matrices and on the
classical p = 1 path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .scalars import (HALF, I, MINUS_ONE, ONE, Q_MINUS_QINV, QValue, Scalar,
                      p_power)
from .qexpr import NormalForm
from .fockrep import (ScalarMatrix, lorentz_block, number_matrix,
                      number_matrix_float, represent, represent_float,
                      spectral_function)
from .report import VerificationReport
from .suq2 import (BASIS1_RELATIONS, GeneratorSet, KULISH, Relation,
                   WORONOWICZ, basis_transform, js_generators,
                   qbracket_diagonal, verify_relations)

UNBARRED = ("J+", "J-", "qJ3", "qJ3inv")
BARRED = ("Jb+", "Jb-", "qJb3", "qJb3inv")

_MI_HALF = MINUS_ONE * I * HALF          # 1/(2i)
_I_HALF = I * HALF

CORRECTED = "corrected"
PAPER_LITERAL = "paper_literal"


def chiral_generators() -> GeneratorSet:
    """Both commuting SU_q(2) copies on modes (1,2) and (3,4)."""
    g = js_generators("unbarred")
    gb = js_generators("barred")
    els = dict(g.elements)
    els.update({"Jb+": gb["J+"], "Jb-": gb["J-"],
                "qJb3": gb["qJ3"], "qJb3inv": gb["qJ3inv"]})
    return GeneratorSet("chiral", els, "both", NormalForm.one())


def _barred_view(els: dict) -> GeneratorSet:
    view = {"J+": els["Jb+"], "J-": els["Jb-"],
            "qJ3": els["qJb3"], "qJ3inv": els["qJb3inv"]}
    return GeneratorSet(KULISH, view, "barred", NormalForm.one())


# ---------------------------------------------------------------------------
# Rotations, boosts, braces
# ---------------------------------------------------------------------------

@dataclass
class LorentzGenerators:
    variant: str
    ladders: dict                 # J1, J2, K1, K2 normal forms
    chiral: dict                  # the eight chiral generators
    j3_weights: dict = field(default_factory=dict)
    k3_weights: dict = field(default_factory=dict)

    def __getitem__(self, k):
        if k in self.ladders:
            return self.ladders[k]
        return self.chiral[k]


def rotation_boost_generators(variant: str = CORRECTED) -> LorentzGenerators:
    """Rotations J_i and boosts K_i from the chiral ladder combinations.

    The corrected variant carries the 1/(2i) normalization on J2 (matching
    the classical oscillator form); the literal variant keeps the printed
    1/2, which makes the commutator table fail by a factor of i and is
    retained for the discrepancy report.
    """
    if variant not in (CORRECTED, PAPER_LITERAL):
        raise ValueError(f"unknown variant {variant!r}")
    c = chiral_generators()
    jp, jm = c["J+"], c["J-"]
    bp, bm = c["Jb+"], c["Jb-"]
    j2_coeff = _MI_HALF if variant == CORRECTED else HALF
    ladders = {
        "J1": (jp + jm + bp + bm) * HALF,
        "J2": (jp - jm + bp - bm) * j2_coeff,
        "K1": (jp + jm - bp - bm) * _MI_HALF,
        "K2": (jp - jm - bp + bm) * (MINUS_ONE * HALF),
    }
    j3w = {1: HALF, 2: -HALF, 3: HALF, 4: -HALF}
    k3w = {1: _MI_HALF, 2: _I_HALF, 3: _I_HALF, 4: _MI_HALF}
    return LorentzGenerators(variant, ladders, c.elements, j3w, k3w)


def qbracket_2j3() -> NormalForm:
    return qbracket_diagonal("unbarred")


def qbracket_2jb3() -> NormalForm:
    return qbracket_diagonal("barred")


def brace(kind: str) -> NormalForm:
    """Deformed diagonal braces {2 J3}_q and {2 K3}_q, where the two
    q-bracket arguments reduce to 2 J3 and 2 Jb3."""
    if kind in ("J3", "rotation"):
        return qbracket_2j3() + qbracket_2jb3()
    if kind in ("K3", "boost"):
        return (qbracket_2j3() - qbracket_2jb3()) * (MINUS_ONE * I)
    raise ValueError("non-diagonal brace requires spectral calculus; see "
                     "fockrep.spectral_function")


# ---------------------------------------------------------------------------
# The commutator table
# ---------------------------------------------------------------------------

def _nc(nf: NormalForm, weights) -> NormalForm:
    return nf.number_commutator(weights)


def k3_rows(gen: LorentzGenerators):
    """Diagonal (k = 3) rows: commutators closing on the deformed braces."""
    J1, J2 = gen["J1"], gen["J2"]
    K1, K2 = gen["K1"], gen["K2"]
    bj = brace("J3")
    bk = brace("K3")
    return (
        ("rotation-12", "[J1, J2] = (i/2){2 J3}_q",
         (J1 * J2 - J2 * J1) - bj * _I_HALF),
        ("boost-12", "[K1, K2] = -(i/2){2 J3}_q",
         (K1 * K2 - K2 * K1) + bj * _I_HALF),
        ("mixed-12", "[J1, K2] = (i/2){2 K3}_q",
         (J1 * K2 - K2 * J1) - bk * _I_HALF),
        ("mixed-21", "[J2, K1] = -(i/2){2 K3}_q",
         (J2 * K1 - K1 * J2) + bk * _I_HALF),
        ("mixed-11", "[J1, K1] = 0", J1 * K1 - K1 * J1),
        ("mixed-22", "[J2, K2] = 0", J2 * K2 - K2 * J2),
    )


def knot3_rows(gen: LorentzGenerators):
    """Off-diagonal (k != 3) rows under the undeformed bracket reading,
    computed exactly from the number grading."""
    J1, J2 = gen["J1"], gen["J2"]
    K1, K2 = gen["K1"], gen["K2"]
    j3, k3 = gen.j3_weights, gen.k3_weights
    return (
        ("rotation-23", "[J2, J3] = i J1", _nc(J2, j3) - J1 * I),
        ("rotation-31", "[J3, J1] = i J2", -_nc(J1, j3) - J2 * I),
        ("boost-23", "[K2, K3] = -i J1", _nc(K2, k3) + J1 * I),
        ("boost-31", "[K3, K1] = -i J2", -_nc(K1, k3) + J2 * I),
        ("mixed-23", "[J2, K3] = i K1", _nc(J2, k3) - K1 * I),
        ("mixed-31", "[J3, K1] = i K2", -_nc(K1, j3) - K2 * I),
        ("mixed-32", "[J3, K2] = -i K1", -_nc(K2, j3) + K1 * I),
        ("mixed-13", "[J1, K3] = -i K2", _nc(J1, k3) + K2 * I),
    )


def verify_lorentz_suite(config) -> VerificationReport:
    report = VerificationReport(suite="lorentz", config=config.as_dict())
    backends = config.backends
    c = chiral_generators()

    if "symbolic" in backends:
        # both chiral copies satisfy their own algebra
        verify_relations(js_generators("unbarred"), BASIS1_RELATIONS, report)
        verify_relations(js_generators("barred"), BASIS1_RELATIONS, report)
        for tag, qb in (("unbarred", qbracket_2j3()),
                        ("barred", qbracket_2jb3())):
            g = js_generators(tag)
            res = g["J+"] * g["J-"] - g["J-"] * g["J+"] - qb
            report.check(f"chiral:{tag}:ladder-commutator-qinteger",
                         res.is_zero(), anchor="[J+, J-] = [2 J3]_q",
                         residual=str(res))
        # cross commutativity
        for a in UNBARRED:
            for b in BARRED:
                res = c[a] * c[b] - c[b] * c[a]
                report.check(f"chiral:commute:{a},{b}", res.is_zero(),
                             anchor="barred and unbarred generators commute",
                             residual=str(res))

        gen = rotation_boost_generators(CORRECTED)
        for name, anchor, res in k3_rows(gen):
            report.check(f"lorentz:k3:{name}", res.is_zero(), anchor=anchor,
                         residual=str(res))
        for name, anchor, res in knot3_rows(gen):
            report.check(f"lorentz:knot3:{name}", res.is_zero(),
                         anchor=anchor + " (undeformed bracket reading)",
                         residual=str(res))

        # the printed J2 normalization fails the closing of the table
        lit = rotation_boost_generators(PAPER_LITERAL)
        res = next(r for n, a, r in k3_rows(lit) if n == "rotation-12")
        report.check("lorentz:printed-J2-normalization", res.is_zero(),
                     anchor="printed J2 lacks the 1/i of the classical "
                     "rotation; table closes only with it restored",
                     expected_failure=True,
                     residual="[J1, J2] differs from (i/2){2 J3}_q by a "
                     "factor of i")
        if config.variant == PAPER_LITERAL:
            # every table row touching J2 breaks by the same factor of i
            j2_rows = {"rotation-12", "mixed-21", "rotation-23",
                       "rotation-31", "boost-31", "mixed-23"}
            for name, anchor, res in (*k3_rows(lit), *knot3_rows(lit)):
                report.check(f"lorentz:literal:{name}", res.is_zero(),
                             anchor=anchor, expected_failure=name in j2_rows,
                             residual="off by a factor of i (printed J2 "
                             "normalization)")

        # identity used by the braces: J3 + i K3 = 2 J3 (weights)
        gen_c = rotation_boost_generators(CORRECTED)
        mix = {m: gen_c.j3_weights[m] + I * gen_c.k3_weights[m]
               for m in (1, 2, 3, 4)}
        ok = (mix[1] == ONE and mix[2] == MINUS_ONE
              and mix[3].is_zero() and mix[4].is_zero())
        report.check("lorentz:brace-argument-identity", ok,
                     anchor="J3 + i K3 = 2 J3 (unbarred)",
                     residual=str({m: str(s) for m, s in mix.items()}))

        woronowicz_form_entries(report)

    if "exact" in backends:
        gen = rotation_boost_generators(CORRECTED)
        nmax = min(config.max_block, 4)
        blocks = [lorentz_block(n, nb)
                  for n in range(nmax + 1) for nb in range(nmax + 1)]
        for p in config.p_values:
            if p == 1:
                continue
            qv = QValue(p)
            for block in blocks:
                _table_block_entries(report, gen, block, qv)
        classical_limit_entries(report)

    if "float" in backends:
        spectral_experiment_entries(report, float(config.float_p))

    return report


def _table_block_entries(report, gen, block, qv):
    """Independent matrix check of the commutator table on one graded block:
    generator matrices multiply as matrices, diagonals come from the number
    operators."""
    m = {k: represent(gen[k], block, qv) for k in ("J1", "J2", "K1", "K2")}
    nmat = {mode: number_matrix(block, mode) for mode in (1, 2, 3, 4)}

    def weighted(ws):
        out = ScalarMatrix.zeros(block.dim)
        for mode, w in ws.items():
            out = out + nmat[mode].scaled(w)
        return out

    m["J3"] = weighted(gen.j3_weights)
    m["K3"] = weighted(gen.k3_weights)
    m["braceJ3"] = represent(brace("J3"), block, qv)
    m["braceK3"] = represent(brace("K3"), block, qv)

    def comm(a, b):
        return m[a] * m[b] - m[b] * m[a]

    rows = (
        ("k3:rotation-12", comm("J1", "J2") - m["braceJ3"].scaled(_I_HALF)),
        ("k3:boost-12", comm("K1", "K2") + m["braceJ3"].scaled(_I_HALF)),
        ("k3:mixed-12", comm("J1", "K2") - m["braceK3"].scaled(_I_HALF)),
        ("k3:mixed-21", comm("J2", "K1") + m["braceK3"].scaled(_I_HALF)),
        ("knot3:rotation-23", comm("J2", "J3") - m["J1"].scaled(I)),
        ("knot3:rotation-31", comm("J3", "J1") - m["J2"].scaled(I)),
        ("knot3:boost-23", comm("K2", "K3") + m["J1"].scaled(I)),
        ("knot3:boost-31", comm("K3", "K1") + m["J2"].scaled(I)),
        ("knot3:mixed-23", comm("J2", "K3") - m["K1"].scaled(I)),
        ("knot3:mixed-31", comm("J3", "K1") - m["K2"].scaled(I)),
        ("knot3:mixed-32", comm("J3", "K2") + m["K1"].scaled(I)),
        ("knot3:mixed-13", comm("J1", "K3") + m["K2"].scaled(I)),
    )
    for name, res in rows:
        report.check(f"lorentz:{name}", res.is_zero(), backend="exact",
                     block=block.label(), p=qv.p, residual="nonzero matrix")


def classical_limit_entries(report: VerificationReport) -> None:
    """At p = 1 the generators close the classical rotation/boost table
    exactly on block matrices."""
    gen = rotation_boost_generators(CORRECTED)
    qv = QValue(1)
    for n, nb in ((1, 0), (0, 1), (1, 1)):
        block = lorentz_block(n, nb)
        m = {k: represent(gen[k], block, qv)
             for k in ("J1", "J2", "K1", "K2")}
        nmat = {mode: number_matrix(block, mode) for mode in (1, 2, 3, 4)}

        def weighted(ws):
            out = ScalarMatrix.zeros(block.dim)
            for mode, w in ws.items():
                out = out + nmat[mode].scaled(w)
            return out

        m["J3"] = weighted(gen.j3_weights)
        m["K3"] = weighted(gen.k3_weights)

        def comm(a, b):
            return m[a] * m[b] - m[b] * m[a]

        eps = {(1, 2): 3, (2, 3): 1, (3, 1): 2}
        ok = True
        for (i, j), k in eps.items():
            si, sj, sk = f"J{i}", f"J{j}", f"J{k}"
            ok &= (comm(si, sj) - m[sk].scaled(I)).is_zero()
            ok &= (comm(f"K{i}", f"K{j}") + m[sk].scaled(I)).is_zero()
            ok &= (comm(si, f"K{j}") - m[f"K{k}"].scaled(I)).is_zero()
            ok &= (comm(f"J{j}", f"K{i}") + m[f"K{k}"].scaled(I)).is_zero()
        for i in (1, 2, 3):
            ok &= comm(f"J{i}", f"K{i}").is_zero()
        report.check("lorentz:classical-limit-table", ok, backend="exact",
                     block=block.label(), p=1,
                     anchor="[K_i, K_j] = -i eps_ijk J_k and companions "
                     "at q = 1", residual="classical table violated")


def woronowicz_form_entries(report: VerificationReport) -> None:
    """The rotation/boost formulas written through the differential-calculus
    basis reproduce the same normal forms once the quartic-root exponential
    is identified with q^J3."""
    gen = rotation_boost_generators(CORRECTED)
    rebuilt = {"J1": NormalForm.zero(), "J2": NormalForm.zero(),
               "K1": NormalForm.zero(), "K2": NormalForm.zero()}
    rtq, rtqinv = p_power(1), p_power(-1)
    for copy, tag in ((1, "unbarred"), (2, "barred")):
        w = basis_transform(js_generators(tag), WORONOWICZ)
        tau3 = NormalForm.one() - w["T3"] * Q_MINUS_QINV
        u = tau3.root(4).inverse()          # the q^J3 identification
        plus = w["T+"] * u * rtqinv
        minus = w["T-"] * u * rtq
        sign = ONE if copy == 1 else MINUS_ONE
        rebuilt["J1"] = rebuilt["J1"] + (plus + minus) * HALF
        rebuilt["J2"] = rebuilt["J2"] + (plus - minus) * _MI_HALF
        rebuilt["K1"] = rebuilt["K1"] + (plus + minus) * _MI_HALF * sign
        rebuilt["K2"] = rebuilt["K2"] - (plus - minus) * HALF * sign
    for k in ("J1", "J2", "K1", "K2"):
        res = rebuilt[k] - gen[k]
        report.check(f"lorentz:differential-basis-form:{k}", res.is_zero(),
                     anchor="rotations/boosts through the T-basis match the "
                     "ladder-basis normal forms", residual=str(res))


def spectral_experiment_entries(report: VerificationReport,
                                p: float = 1.3) -> None:
    """Numerical experiment for the off-diagonal bracket reading: compare
    the undeformed right side 2 J1 against the spectral q-integer [2 J1]
    inside the row [J2, J3].  Reported, never asserted."""
    gen = rotation_boost_generators(CORRECTED)
    block = lorentz_block(1, 1)
    q = p * p

    def fnum(x):
        return (q ** x - q ** (-x)) / (q - 1.0 / q)

    j1 = represent_float(gen["J1"], block, p)
    j2 = represent_float(gen["J2"], block, p)
    j3 = sum(complex(w.eval_float(p)) * number_matrix_float(block, mode)
             for mode, w in gen.j3_weights.items())
    lhs = j2 @ j3 - j3 @ j2
    two_j1 = 2.0 * j1
    try:
        spectral = spectral_function(two_j1, fnum)
        d_spec = float(np.linalg.norm(lhs - 0.5j * spectral))
    except ArithmeticError as exc:
        d_spec = float("nan")
        report.add("lorentz:spectral-experiment", status="flagged",
                   backend="float", block=block.label(), p=p,
                   residual=f"spectral calculus failed: {exc}")
        return
    d_und = float(np.linalg.norm(lhs - 0.5j * two_j1))
    report.add(
        "lorentz:spectral-experiment", status="flagged", backend="float",
        block=block.label(), p=p,
        anchor="which reading of the off-diagonal bracket closes the table",
        residual=(f"|[J2,J3] - (i/2)*2J1| = {d_und:.3e} (closes); "
                  f"|[J2,J3] - (i/2)*[2J1]_spectral| = {d_spec:.3e}"))


# ---------------------------------------------------------------------------
# 4-dimensional fundamental representation and the Hopf structure
# ---------------------------------------------------------------------------

def _e4(i, j):
    m = ScalarMatrix.zeros(4)
    m.rows[i][j] = ONE
    return m


def fundamental_rep4() -> GeneratorSet:
    """The chiral copies embedded in complementary 2x2 diagonal blocks."""
    p, pinv = p_power(1), p_power(-1)
    one = ONE
    els = {
        "qJ3": ScalarMatrix.diagonal([p, pinv, one, one]),
        "qJ3inv": ScalarMatrix.diagonal([pinv, p, one, one]),
        "J+": _e4(0, 1),
        "J-": _e4(1, 0),
        "qJb3": ScalarMatrix.diagonal([one, one, p, pinv]),
        "qJb3inv": ScalarMatrix.diagonal([one, one, pinv, p]),
        "Jb+": _e4(2, 3),
        "Jb-": _e4(3, 2),
    }
    return GeneratorSet("rep4", els, "both", ScalarMatrix.identity(4))


def chiral_relation_list():
    """All chiral relations as builders over the eight-label dictionary:
    each copy's algebra plus full cross-commutativity."""
    rels = []
    for rel in BASIS1_RELATIONS:
        rels.append(Relation(f"unbarred:{rel.name}", rel.anchor, rel.build))

    def make_barred(rel):
        def build(E, sc):
            view = {"J+": E["Jb+"], "J-": E["Jb-"], "qJ3": E["qJb3"],
                    "qJ3inv": E["qJb3inv"], "one": E["one"]}
            return rel.build(_DictView(view), sc)
        return Relation(f"barred:{rel.name}", rel.anchor, build)

    rels.extend(make_barred(rel) for rel in BASIS1_RELATIONS)

    def make_cross(a, b):
        def build(E, sc):
            return E[a] * E[b] - E[b] * E[a]
        return Relation(f"commute:{a},{b}",
                        "barred and unbarred generators commute", build)

    for a in UNBARRED:
        for b in BARRED:
            rels.append(make_cross(a, b))
    return tuple(rels)


class _DictView:
    def __init__(self, d):
        self._d = d

    def __getitem__(self, k):
        return self._d[k]


# Coproduct table: label -> list of (left word, right word).
COPRODUCT = {
    "qJ3": [(("qJ3",), ("qJ3",))],
    "qJ3inv": [(("qJ3inv",), ("qJ3inv",))],
    "qJb3": [(("qJb3",), ("qJb3",))],
    "qJb3inv": [(("qJb3inv",), ("qJb3inv",))],
    "J+": [(("J+",), ("qJ3inv", "qJb3")), (("qJ3", "qJb3inv"), ("J+",))],
    "J-": [(("J-",), ("qJ3inv", "qJb3inv")), (("qJ3", "qJb3"), ("J-",))],
    "Jb+": [(("Jb+",), ("qJ3inv", "qJb3")), (("qJ3", "qJb3inv"), ("Jb+",))],
    "Jb-": [(("Jb-",), ("qJ3", "qJb3")), (("qJ3inv", "qJb3inv"), ("Jb-",))],
}

# Antipode table: label -> (coefficient, image word).
ANTIPODE = {
    "qJ3": (ONE, ("qJ3inv",)),
    "qJ3inv": (ONE, ("qJ3",)),
    "qJb3": (ONE, ("qJb3inv",)),
    "qJb3inv": (ONE, ("qJb3",)),
    "J+": (MINUS_ONE * p_power(-2), ("J+",)),
    "J-": (MINUS_ONE * p_power(2), ("J-",)),
    "Jb+": (MINUS_ONE * p_power(2), ("Jb+",)),
    "Jb-": (MINUS_ONE * p_power(-2), ("Jb-",)),
}

STANDARD = "standard"
PAPER_COUNIT = "paper"


def counit_table(variant: str = STANDARD) -> dict:
    """Counit values; the printed variant sets the ladder counits to 1, the
    standard one to 0 (the value the axioms force)."""
    eps = {"qJ3": ONE, "qJ3inv": ONE, "qJb3": ONE, "qJb3inv": ONE}
    ladder = ONE if variant == PAPER_COUNIT else Scalar.from_rational(0)
    for k in ("J+", "J-", "Jb+", "Jb-"):
        eps[k] = ladder
    return eps


class HopfRep:
    """Matrix realization of the Hopf maps on the 4-dim representation."""

    def __init__(self):
        self.rep = fundamental_rep4()
        self._delta_cache = {}

    def rho(self, word) -> ScalarMatrix:
        out = ScalarMatrix.identity(4)
        for w in word:
            out = out * self.rep[w]
        return out

    def rho_antipode(self, word) -> ScalarMatrix:
        """S is an antihomomorphism: S(xy) = S(y) S(x)."""
        out = ScalarMatrix.identity(4)
        for w in reversed(word):
            coeff, img = ANTIPODE[w]
            out = out * self.rho(img).scaled(coeff)
        return out

    def delta(self, label) -> ScalarMatrix:
        if label not in self._delta_cache:
            out = ScalarMatrix.zeros(16)
            for lw, rw in COPRODUCT[label]:
                out = out + self.rho(lw).kron(self.rho(rw))
            self._delta_cache[label] = out
        return self._delta_cache[label]

    def delta_word(self, word) -> ScalarMatrix:
        out = ScalarMatrix.identity(16)
        for w in word:
            out = out * self.delta(w)
        return out

    def eps_word(self, word, eps) -> Scalar:
        out = ONE
        for w in word:
            out = out * eps[w]
        return out


def hopf_axiom_entries(report: VerificationReport,
                       counit_variant: str = STANDARD) -> None:
    """Coalgebra axioms as exact matrix identities on the 4-dim
    representation: homomorphism property of the coproduct (16x16),
    coassociativity (64x64), counit and both antipode axioms (4x4)."""
    h = HopfRep()
    eps = counit_table(counit_variant)
    flag_eps = counit_variant == PAPER_COUNIT
    labels = tuple(COPRODUCT)

    E16 = {label: h.delta(label) for label in labels}
    E16["one"] = ScalarMatrix.identity(16)
    view = _DictView(E16)
    for rel in chiral_relation_list():
        res = rel.build(view, lambda s: s)
        report.check(f"hopf:coproduct-homomorphism:{rel.name}",
                     res.is_zero(), anchor=rel.anchor, backend="exact",
                     block="16x16", residual="nonzero matrix")

    for label in labels:
        lhs = ScalarMatrix.zeros(64)
        rhs = ScalarMatrix.zeros(64)
        for lw, rw in COPRODUCT[label]:
            lhs = lhs + h.delta_word(lw).kron(h.rho(rw))
            rhs = rhs + h.rho(lw).kron(h.delta_word(rw))
        report.check(f"hopf:coassociativity:{label}", (lhs - rhs).is_zero(),
                     backend="exact", block="64x64",
                     residual="nonzero matrix")

    ident = ScalarMatrix.identity(4)
    for label in labels:
        left = ScalarMatrix.zeros(4)
        right = ScalarMatrix.zeros(4)
        for lw, rw in COPRODUCT[label]:
            left = left + h.rho(rw).scaled(h.eps_word(lw, eps))
            right = right + h.rho(lw).scaled(h.eps_word(rw, eps))
        target = h.rho((label,))
        ok = (left - target).is_zero() and (right - target).is_zero()
        expected_failure = flag_eps and label in ("J+", "J-", "Jb+", "Jb-")
        report.check(f"hopf:counit-axiom:{label}", ok,
                     anchor="(eps x id) Delta = id = (id x eps) Delta",
                     backend="exact", block="4x4",
                     residual="printed ladder counit value 1 breaks the "
                     "axiom" if expected_failure else "nonzero matrix",
                     expected_failure=expected_failure)

    for label in labels:
        left = ScalarMatrix.zeros(4)
        right = ScalarMatrix.zeros(4)
        for lw, rw in COPRODUCT[label]:
            left = left + h.rho_antipode(lw) * h.rho(rw)
            right = right + h.rho(lw) * h.rho_antipode(rw)
        target = ident.scaled(eps[label])
        ok = (left - target).is_zero() and (right - target).is_zero()
        expected_failure = flag_eps and label in ("J+", "J-", "Jb+", "Jb-")
        report.check(f"hopf:antipode-axiom:{label}", ok,
                     anchor="m (S x id) Delta = eps(.) 1 = m (id x S) Delta",
                     backend="exact", block="4x4",
                     residual="antipode axiom forces the standard counit"
                     if expected_failure else "nonzero matrix",
                     expected_failure=expected_failure)


def hopf_axiom_check(counit_variant: str = STANDARD) -> VerificationReport:
    """Standalone coalgebra axiom report on the 4-dim representation."""
    report = VerificationReport(suite="hopf-axioms",
                                config={"counit": counit_variant})
    hopf_axiom_entries(report, counit_variant)
    return report


def verify_hopf_suite(config) -> VerificationReport:
    report = VerificationReport(suite="hopf", config=config.as_dict())
    rep4 = fundamental_rep4()
    view = _DictView({**rep4.elements, "one": rep4.one})
    for rel in chiral_relation_list():
        res = rel.build(view, lambda s: s)
        report.check(f"rep4:{rel.name}", res.is_zero(), anchor=rel.anchor,
                     backend="exact", block="4x4",
                     residual="nonzero matrix")
    hopf_axiom_entries(report, STANDARD)
    if config.counit == PAPER_COUNIT:
        hopf_axiom_entries(report, PAPER_COUNIT)
    return report
