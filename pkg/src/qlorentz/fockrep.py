"""Exact matrix representations on total-number-graded Fock blocks.

Every generator used by the algebra builders conserves the total occupation
of each chiral mode pair, so relation checks on graded blocks are exact with
no truncation artifacts.  Two backends realize the defining relations:

  exact_shift:     a|n> = [n]|n-1>,        a^dag|n> = |n+1>      (Scalar exact)
  float_symmetric: a|n> = sqrt([n])|n-1>,  a^dag|n> = sqrt([n+1])|n+1> (floats)

A cutoff-embedding space exists for expressions that do not conserve the
grading (bare a, a^dag); its boundary columns are untrusted and it is never
used by the acceptance suites.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .scalars import ONE, ZERO, Scalar, QValue, qnum
from .qexpr import (Bracket, Expr, Gen, GradingError, NormalForm, Power,
                    Product, QNum, QPow, ScalarLit, Sum, normal_order)
from .report import VerificationReport


# ---------------------------------------------------------------------------
# Graded blocks and the cutoff embedding
# ---------------------------------------------------------------------------

class FockBlock:
    """Finite block of fixed total occupation per chiral mode pair."""

    def __init__(self, pairs, totals):
        self.pairs = tuple(tuple(p) for p in pairs)
        self.totals = tuple(totals)
        if len(self.pairs) != len(self.totals):
            raise ValueError("one total per mode pair required")
        self.modes = tuple(m for p in self.pairs for m in p)
        states = [()]
        for (m1, m2), n in zip(self.pairs, self.totals):
            states = [s + (k, n - k) for s in states
                      for k in range(n, -1, -1)]
        self.states = states
        self.index = {s: i for i, s in enumerate(states)}

    @property
    def dim(self) -> int:
        return len(self.states)

    def occupation(self, state, mode: int) -> int:
        return state[self.modes.index(mode)]

    def label(self) -> str:
        if len(self.pairs) == 1:
            return f"n={self.totals[0]}"
        return f"(n,nbar)=({self.totals[0]},{self.totals[1]})"

    def __repr__(self):
        return f"FockBlock(pairs={self.pairs}, totals={self.totals})"


def pair_block(n: int, modes=(1, 2)) -> FockBlock:
    return FockBlock((modes,), (n,))


def lorentz_block(n: int, nbar: int) -> FockBlock:
    return FockBlock(((1, 2), (3, 4)), (n, nbar))


class CutoffSpace:
    """Span of occupations with total <= cutoff; creation operators that leave
    it are truncated, so only columns with headroom are trustworthy."""

    def __init__(self, modes, cutoff: int):
        self.pairs = (tuple(modes),)
        self.modes = tuple(modes)
        self.cutoff = cutoff
        self.states = [s for s in self._enumerate(len(self.modes), cutoff)]
        self.index = {s: i for i, s in enumerate(self.states)}

    @staticmethod
    def _enumerate(k, cutoff):
        if k == 0:
            yield ()
            return
        for head in range(cutoff, -1, -1):
            for rest in CutoffSpace._enumerate(k - 1, cutoff - head):
                yield (head,) + rest

    @property
    def dim(self) -> int:
        return len(self.states)

    def trusted_columns(self, headroom: int):
        return [i for i, s in enumerate(self.states)
                if sum(s) + headroom <= self.cutoff]

    def label(self) -> str:
        return f"cutoff={self.cutoff}"


# ---------------------------------------------------------------------------
# Exact matrices of Scalars
# ---------------------------------------------------------------------------

class ScalarMatrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    @classmethod
    def zeros(cls, n, m=None) -> "ScalarMatrix":
        m = n if m is None else m
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n) -> "ScalarMatrix":
        out = cls.zeros(n)
        for i in range(n):
            out.rows[i][i] = ONE
        return out

    @classmethod
    def diagonal(cls, entries) -> "ScalarMatrix":
        entries = list(entries)
        out = cls.zeros(len(entries))
        for i, e in enumerate(entries):
            out.rows[i][i] = Scalar.coerce(e)
        return out

    def __add__(self, other):
        return ScalarMatrix([[b if a.is_zero() else (a if b.is_zero()
                              else a + b)
                              for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return ScalarMatrix([[a if b.is_zero() else a - b
                              for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return ScalarMatrix([[-a for a in r] for r in self.rows])

    def scaled(self, c) -> "ScalarMatrix":
        c = Scalar.coerce(c)
        if c.is_zero():
            return ScalarMatrix.zeros(self.nrows, self.ncols)
        return ScalarMatrix([[ZERO if a.is_zero() else c * a for a in r]
                             for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("matrix dimension mismatch")
        nnz = [[(j, b) for j, b in enumerate(row) if not b.is_zero()]
               for row in other.rows]
        out = [[ZERO] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            orow = out[i]
            for k, aik in enumerate(row):
                if aik.is_zero():
                    continue
                for j, b in nnz[k]:
                    orow[j] = orow[j] + aik * b
        res = ScalarMatrix.__new__(ScalarMatrix)
        res.rows, res.nrows, res.ncols = out, self.nrows, other.ncols
        return res

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        return NotImplemented

    __matmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse_diagonal() ** (-n)
        out = ScalarMatrix.identity(self.nrows)
        for _ in range(n):
            out = out * self
        return out

    def inverse_diagonal(self) -> "ScalarMatrix":
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if i != j and not a.is_zero():
                    raise ValueError("only diagonal matrices can be inverted "
                                     "in the naive evaluator")
        return ScalarMatrix.diagonal([self.rows[i][i].inverse()
                                      for i in range(self.nrows)])

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix([[self.rows[i][j] for i in range(self.nrows)]
                             for j in range(self.ncols)])

    def kron(self, other) -> "ScalarMatrix":
        out = ScalarMatrix.zeros(self.nrows * other.nrows,
                                 self.ncols * other.ncols)
        for i in range(self.nrows):
            for j in range(self.ncols):
                a = self.rows[i][j]
                if a.is_zero():
                    continue
                for k in range(other.nrows):
                    for l in range(other.ncols):
                        b = other.rows[k][l]
                        if not b.is_zero():
                            out.rows[i * other.nrows + k][j * other.ncols + l] = a * b
        return out

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def __eq__(self, other):
        return (isinstance(other, ScalarMatrix)
                and self.nrows == other.nrows and self.ncols == other.ncols
                and all(a == b for r1, r2 in zip(self.rows, other.rows)
                        for a, b in zip(r1, r2)))

    def eval_exact(self, p) -> "ScalarMatrix":
        p = Fraction(p)
        return ScalarMatrix([[a.eval_exact(p) for a in r] for r in self.rows])

    def to_complex(self, p: complex) -> np.ndarray:
        return np.array([[a.eval_float(p) for a in r] for r in self.rows],
                        dtype=complex)

    def columns(self, cols) -> "ScalarMatrix":
        return ScalarMatrix([[r[j] for j in cols] for r in self.rows])

    def entries_str(self):
        return [[str(a) for a in r] for r in self.rows]

    def __repr__(self):
        return f"ScalarMatrix({self.nrows}x{self.ncols})"

    def __str__(self):
        widths = [max(len(str(self.rows[i][j])) for i in range(self.nrows))
                  for j in range(self.ncols)]
        lines = []
        for r in self.rows:
            lines.append("[ " + "  ".join(str(a).rjust(w)
                                          for a, w in zip(r, widths)) + " ]")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Representation of normal forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _qnum_product(n: int, s: int) -> Scalar:
    """[n][n-1]...[n-s+1] (exact annihilation factor for a^s on |n>)."""
    out = ONE
    for k in range(s):
        out = out * qnum(n - k)
    return out


def _check_conserves(nf: NormalForm, space) -> None:
    for pair in space.pairs:
        if not nf.conserves_pair(pair):
            raise GradingError(
                "operator leaves graded block: monomials do not conserve "
                f"the total number of modes {pair}")


def represent(nf: NormalForm, block, qvalue: QValue = None,
              allow_nonconserving: bool = False) -> ScalarMatrix:
    """Exact matrix of a normal form (exact_shift backend).

    Entries accumulate symbolically in Q(p)(i, sqrt2) and are only then
    evaluated at the optional rational point, so removable poles like
    (q^k - q^-k)/(q - q^-1) stay evaluable at p = 1.
    """
    missing = nf.modes() - set(block.modes)
    if missing:
        raise ValueError(f"operator touches modes {sorted(missing)} that "
                         "the block does not carry")
    if isinstance(block, FockBlock) and not allow_nonconserving:
        _check_conserves(nf, block)
    dim = block.dim
    out = ScalarMatrix.zeros(dim)
    mode_pos = {m: i for i, m in enumerate(block.modes)}
    inside = isinstance(block, CutoffSpace)
    cutoff = block.cutoff if inside else None
    for key, coeff in nf.terms.items():
        for j, state in enumerate(block.states):
            factor = coeff
            new_state = list(state)
            ok = True
            for m in block.modes:
                t, r, s = key[m - 1]
                pos = mode_pos[m]
                n = new_state[pos]
                if s:
                    if n < s:
                        ok = False
                        break
                    f = _qnum_product(n, s)
                    if f.is_zero():
                        ok = False
                        break
                    factor = factor * f
                    n -= s
                n += r
                new_state[pos] = n
                if t:
                    factor = factor * Scalar.p_power(t * n)
            if not ok:
                continue
            tgt = tuple(new_state)
            i = block.index.get(tgt)
            if i is None:
                if inside and sum(tgt) > cutoff:
                    continue        # truncated: falls outside the cutoff span
                raise GradingError("operator leaves graded block")
            out.rows[i][j] = out.rows[i][j] + factor
    if qvalue is not None:
        out = out.eval_exact(qvalue.p)
    return out


def represent_float(nf: NormalForm, block, p: float) -> np.ndarray:
    """Float matrix of a normal form in the symmetric backend, where the
    creator is the transpose of the annihilator."""
    missing = nf.modes() - set(block.modes)
    if missing:
        raise ValueError(f"operator touches modes {sorted(missing)} that "
                         "the block does not carry")
    if isinstance(block, FockBlock):
        _check_conserves(nf, block)
    dim = block.dim
    out = np.zeros((dim, dim), dtype=complex)
    mode_pos = {m: i for i, m in enumerate(block.modes)}
    inside = isinstance(block, CutoffSpace)
    cutoff = block.cutoff if inside else None
    q = p * p

    def fnum(n):
        return (q ** n - q ** (-n)) / (q - 1.0 / q) if q != 1.0 else float(n)

    for key, coeff in nf.terms.items():
        c0 = coeff.eval_float(p)
        for j, state in enumerate(block.states):
            factor = c0
            new_state = list(state)
            ok = True
            for m in block.modes:
                t, r, s = key[m - 1]
                pos = mode_pos[m]
                n = new_state[pos]
                for k in range(s):
                    if n - k <= 0:
                        ok = False
                        break
                    factor *= math.sqrt(fnum(n - k))
                if not ok or n < s:
                    ok = False
                    break
                n -= s
                for k in range(r):
                    factor *= math.sqrt(fnum(n + k + 1))
                n += r
                new_state[pos] = n
                if t:
                    factor *= p ** (t * n)
            if not ok:
                continue
            tgt = tuple(new_state)
            i = block.index.get(tgt)
            if i is None:
                if inside and sum(tgt) > cutoff:
                    continue
                raise GradingError("operator leaves graded block")
            out[i, j] += factor
    return out


def number_matrix(block, mode: int) -> ScalarMatrix:
    """Diagonal matrix of the number operator of one mode."""
    pos = block.modes.index(mode)
    return ScalarMatrix.diagonal([Scalar.from_rational(s[pos])
                                  for s in block.states])


def number_matrix_float(block, mode: int) -> np.ndarray:
    pos = block.modes.index(mode)
    return np.diag([float(s[pos]) for s in block.states]).astype(complex)


# ---------------------------------------------------------------------------
# Naive expression evaluation (matrix products factor by factor)
# ---------------------------------------------------------------------------

def represent_expr(e: Expr, space, qvalue: QValue = None) -> ScalarMatrix:
    """Evaluate an expression tree by naive matrix algebra: each generator
    becomes a matrix and sums/products/brackets act on matrices.  This is the
    independent oracle for the symbolic rewrite engine."""
    dim = space.dim

    def rec(node) -> ScalarMatrix:
        if isinstance(node, ScalarLit):
            return ScalarMatrix.identity(dim).scaled(node.value)
        if isinstance(node, QNum):
            return ScalarMatrix.identity(dim).scaled(qnum(node.n))
        if isinstance(node, Gen):
            if node.kind == "N":
                return number_matrix(space, node.mode)
            return represent(NormalForm.generator(node.kind, node.mode),
                             space)
        if isinstance(node, QPow):
            return represent(NormalForm.qpow(node.thalf, node.mode), space)
        if isinstance(node, Sum):
            out = rec(node.terms[0])
            for t in node.terms[1:]:
                out = out + rec(t)
            return out
        if isinstance(node, Product):
            out = rec(node.factors[0])
            for f in node.factors[1:]:
                out = out * rec(f)
            return out
        if isinstance(node, Power):
            return rec(node.base) ** node.exponent
        if isinstance(node, Bracket):
            x, y = rec(node.left), rec(node.right)
            if node.weight is None:
                return x * y - y * x
            w = normal_order(node.weight)
            if not w.is_scalar():
                raise ValueError("commutator weight must reduce to a scalar")
            return x * y - (y * x).scaled(w.scalar_part())
        raise TypeError(f"not an expression: {node!r}")

    out = rec(e)
    if qvalue is not None:
        out = out.eval_exact(qvalue.p)
    return out


def represent_expr_float(e: Expr, space, p: float) -> np.ndarray:
    """Float twin of represent_expr (symmetric backend)."""
    dim = space.dim
    eye = np.eye(dim, dtype=complex)

    def rec(node) -> np.ndarray:
        if isinstance(node, ScalarLit):
            return node.value.eval_float(p) * eye
        if isinstance(node, QNum):
            return qnum(node.n).eval_float(p) * eye
        if isinstance(node, Gen):
            if node.kind == "N":
                return number_matrix_float(space, node.mode)
            return represent_float(NormalForm.generator(node.kind, node.mode),
                                   space, p)
        if isinstance(node, QPow):
            return represent_float(NormalForm.qpow(node.thalf, node.mode),
                                   space, p)
        if isinstance(node, Sum):
            out = rec(node.terms[0])
            for t in node.terms[1:]:
                out = out + rec(t)
            return out
        if isinstance(node, Product):
            out = rec(node.factors[0])
            for f in node.factors[1:]:
                out = out @ rec(f)
            return out
        if isinstance(node, Power):
            base = rec(node.base)
            if node.exponent < 0:
                base = np.linalg.inv(base)
            return np.linalg.matrix_power(base, abs(node.exponent))
        if isinstance(node, Bracket):
            x, y = rec(node.left), rec(node.right)
            if node.weight is None:
                return x @ y - y @ x
            w = normal_order(node.weight)
            if not w.is_scalar():
                raise ValueError("commutator weight must reduce to a scalar")
            return x @ y - w.scalar_part().eval_float(p) * (y @ x)
        raise TypeError(f"not an expression: {node!r}")

    return rec(e)


def expr_ladder_weight(e: Expr) -> int:
    """Upper bound on the number of ladder operators any partial product of
    the expression can apply; used to size cutoff headroom."""
    if isinstance(e, Gen):
        return 1 if e.kind in ("a", "ad") else 0
    if isinstance(e, (ScalarLit, QNum, QPow)):
        return 0
    if isinstance(e, Sum):
        return max((expr_ladder_weight(t) for t in e.terms), default=0)
    if isinstance(e, Product):
        return sum(expr_ladder_weight(f) for f in e.factors)
    if isinstance(e, Power):
        return abs(e.exponent) * expr_ladder_weight(e.base)
    if isinstance(e, Bracket):
        w = 0 if e.weight is None else expr_ladder_weight(e.weight)
        return expr_ladder_weight(e.left) + expr_ladder_weight(e.right) + w
    raise TypeError(f"not an expression: {e!r}")


# ---------------------------------------------------------------------------
# Spectral calculus and cross-backend equivalence
# ---------------------------------------------------------------------------

def spectral_function(m: np.ndarray, f, cond_limit: float = 1e8) -> np.ndarray:
    """Apply a scalar function to the eigenvalues of a diagonalizable float
    matrix; raises on defective or ill-conditioned eigenproblems."""
    m = np.asarray(m, dtype=complex)
    if np.allclose(m, m.conj().T, atol=1e-12):
        w, v = np.linalg.eigh(m)
        return (v * np.array([f(x) for x in w])) @ v.conj().T
    w, v = np.linalg.eig(m)
    cond = np.linalg.cond(v)
    if not np.isfinite(cond) or cond > cond_limit:
        raise ArithmeticError(
            f"eigenvector matrix is ill-conditioned (cond ~ {cond:.3g}); "
            "spectral calculus is unreliable here")
    return v @ np.diag([f(x) for x in w]) @ np.linalg.inv(v)


def equivalence_check(x: NormalForm, y: NormalForm, blocks,
                      qvalues=(), float_p: float = 1.3,
                      tol: float = 1e-10,
                      name: str = "equivalence") -> VerificationReport:
    """Cross-backend oracle: exact equality of the two normal forms on every
    block (exact_shift), and agreement within tol in Frobenius norm
    (float_symmetric)."""
    rep = VerificationReport(suite="equivalence",
                             config={"float_p": float_p, "tol": tol})
    qvalues = tuple(qvalues) or (None,)
    for block in blocks:
        for qv in qvalues:
            mx = represent(x, block, qv)
            my = represent(y, block, qv)
            rep.check(name, (mx - my).is_zero(), backend="exact",
                      block=block.label(), p="" if qv is None else qv.p,
                      residual="nonzero exact difference")
        fx = represent_float(x, block, float_p)
        fy = represent_float(y, block, float_p)
        resid = float(np.linalg.norm(fx - fy))
        rep.check(name, resid <= tol, backend="float", block=block.label(),
                  p=float_p, residual=f"frobenius={resid:.3e}")
    return rep
