"""Symbolic core: a small expression language over q-boson generators and a
confluent rewrite system reducing every expression to a canonical normal form.

Canonical monomials have, per mode, the factor order
    q^(c*N) . (a^dag)^r . a^s
with modes commuting.  Creator/annihilator pairs within one mode are
eliminated through (q - q^-1) a^dag a = q^N - q^-N, so stored monomials
always satisfy min(r, s) = 0 and equality of normal forms decides equality
in the algebra at generic p.  Half-integer exponents c are stored as the
integer t = 2c (the power of p multiplying N).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .scalars import (ONE, ZERO, MINUS_ONE, Q_MINUS_QINV, Scalar, p_power,
                      qnum)

NMODES = 4
ModeKey = tuple   # (t, r, s)
MonKey = tuple    # 4-tuple of ModeKey
IDENTITY_MODE = (0, 0, 0)
IDENTITY_KEY = (IDENTITY_MODE,) * NMODES


class GradingError(ValueError):
    """An operator does not preserve the requested graded block."""


# ---------------------------------------------------------------------------
# Expression AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Expr:
    pass


@dataclass(frozen=True)
class ScalarLit(Expr):
    value: Scalar


@dataclass(frozen=True)
class Gen(Expr):
    kind: str   # "a" | "ad" | "N"
    mode: int

    def __post_init__(self):
        if self.kind not in ("a", "ad", "N"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 1 <= self.mode <= NMODES:
            raise ValueError(f"mode {self.mode} out of range 1..{NMODES}")


@dataclass(frozen=True)
class QPow(Expr):
    """q^(c*N_mode) with c = thalf/2."""
    thalf: int
    mode: int


@dataclass(frozen=True)
class QNum(Expr):
    n: int


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple


@dataclass(frozen=True)
class Product(Expr):
    factors: tuple


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Bracket(Expr):
    """Commutator [x, y] or weighted commutator x*y - w*y*x."""
    left: Expr
    right: Expr
    weight: Optional[Expr] = None


# ---------------------------------------------------------------------------
# Single-mode rewrite tables (cached)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _reorder(s: int, r: int):
    """a^s (a^dag)^r = sum_j C_j q^(j N) (a^dag)^(r-j) a^(s-j).

    Built from a (a^dag)^r = q^-r (a^dag)^r a + [r] q^-(r-1) q^N (a^dag)^(r-1).
    Returns a tuple of (j, Scalar)."""
    if s == 0 or r == 0:
        return ((0, ONE),)
    acc: dict = {}
    qmr = p_power(-2 * r)
    for j, c in _reorder(s - 1, r):
        v = qmr * c
        acc[j] = acc.get(j, ZERO) + v
    f = qnum(r) * p_power(2 * (s - r))
    for j, c in _reorder(s - 1, r - 1):
        acc[j + 1] = acc.get(j + 1, ZERO) + f * c
    return tuple(sorted((j, v) for j, v in acc.items() if not v.is_zero()))


@lru_cache(maxsize=None)
def _eliminate(r: int, s: int):
    """(a^dag)^r a^s rewritten so that min(r, s) = 0, using
    a^dag a = (q^N - q^-N)/(q - q^-1).

    Returns a tuple of ((dt, r', s'), Scalar) where dt is the added p-power
    of N in the diagonal prefix."""
    if r == 0 or s == 0:
        return (((0, r, s), ONE),)
    winv = Q_MINUS_QINV.inverse()
    cplus = winv * p_power(-2 * (r - 1))
    cminus = winv * p_power(2 * (r - 1))
    acc: dict = {}
    for (dt, rr, ss), c in _eliminate(r - 1, s - 1):
        k1 = (dt + 2, rr, ss)
        acc[k1] = acc.get(k1, ZERO) + cplus * c
        k2 = (dt - 2, rr, ss)
        acc[k2] = acc.get(k2, ZERO) - cminus * c
    return tuple(sorted((k, v) for k, v in acc.items() if not v.is_zero()))


@lru_cache(maxsize=None)
def _rs_mul(r1: int, s1: int, r2: int, s2: int):
    """Product of ladder words (a^dag)^r1 a^s1 . (a^dag)^r2 a^s2 in canonical
    form, as a tuple of ((dt, r, s), Scalar)."""
    acc: dict = {}
    for j, cj in _reorder(s1, r2):
        c = cj * p_power(-2 * j * r1)
        for (dt, rr, ss), ce in _eliminate(r1 + r2 - j, s1 - j + s2):
            key = (2 * j + dt, rr, ss)
            v = c * ce
            acc[key] = acc.get(key, ZERO) + v
    return tuple(sorted((k, v) for k, v in acc.items() if not v.is_zero()))


def _mode_mul(m1: ModeKey, m2: ModeKey):
    """Single-mode product of canonical mode keys; list of (ModeKey, Scalar)."""
    t1, r1, s1 = m1
    t2, r2, s2 = m2
    base = p_power(t2 * (s1 - r1)) if t2 and (s1 or r1) else ONE
    out = []
    for (dt, r, s), c in _rs_mul(r1, s1, r2, s2):
        coeff = base * c if not base.is_one() else c
        out.append(((t1 + t2 + dt, r, s), coeff))
    return out


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------

class NormalForm:
    """Finite sum of canonical monomials; dict from monomial key to Scalar."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            self.terms = {k: v for k, v in terms.items() if not v.is_zero()}
        else:
            self.terms = {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "NormalForm":
        return cls()

    @classmethod
    def one(cls) -> "NormalForm":
        return cls({IDENTITY_KEY: ONE})

    @classmethod
    def scalar(cls, s) -> "NormalForm":
        s = Scalar.coerce(s)
        return cls({IDENTITY_KEY: s}) if not s.is_zero() else cls()

    @classmethod
    def monomial(cls, key: MonKey, coeff=ONE) -> "NormalForm":
        coeff = Scalar.coerce(coeff)
        for (t, r, s) in key:
            if r and s:
                raise ValueError("monomial keys must have min(r, s) = 0; "
                                 "build via products instead")
        return cls({key: coeff})

    @classmethod
    def generator(cls, kind: str, mode: int) -> "NormalForm":
        modes = [IDENTITY_MODE] * NMODES
        if kind == "a":
            modes[mode - 1] = (0, 0, 1)
        elif kind == "ad":
            modes[mode - 1] = (0, 1, 0)
        else:
            raise ValueError("the bare number operator has no canonical "
                             "monomial; use q-power exponentials")
        return cls({tuple(modes): ONE})

    @classmethod
    def qpow(cls, thalf: int, mode: int) -> "NormalForm":
        if thalf == 0:
            return cls.one()
        modes = [IDENTITY_MODE] * NMODES
        modes[mode - 1] = (thalf, 0, 0)
        return cls({tuple(modes): ONE})

    @classmethod
    def diagonal(cls, tvec, coeff=ONE) -> "NormalForm":
        """Diagonal monomial q^(t1 N1/2) ... from a tuple of p-powers."""
        key = tuple((t, 0, 0) for t in tvec)
        return cls({key: Scalar.coerce(coeff)})

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = NormalForm.scalar(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w.is_zero():
                out.pop(k, None)
            else:
                out[k] = w
        res = NormalForm.__new__(NormalForm)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = NormalForm.__new__(NormalForm)
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = NormalForm.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + NormalForm.scalar(other)

    def scaled(self, c) -> "NormalForm":
        c = Scalar.coerce(c)
        if c.is_zero():
            return NormalForm()
        res = NormalForm.__new__(NormalForm)
        res.terms = {k: c * v for k, v in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        if not isinstance(other, NormalForm):
            return NotImplemented
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                coeff = c1 * c2
                partial = [((), coeff)]
                for m in range(NMODES):
                    m1, m2 = k1[m], k2[m]
                    if m1 == IDENTITY_MODE and m2 == IDENTITY_MODE:
                        partial = [(key + (IDENTITY_MODE,), c)
                                   for key, c in partial]
                        continue
                    if m2 == IDENTITY_MODE:
                        partial = [(key + (m1,), c) for key, c in partial]
                        continue
                    if m1 == IDENTITY_MODE:
                        partial = [(key + (m2,), c) for key, c in partial]
                        continue
                    terms_m = _mode_mul(m1, m2)
                    partial = [(key + (mk,), c * cm)
                               for key, c in partial
                               for mk, cm in terms_m]
                for key, c in partial:
                    w = out.get(key)
                    w = c if w is None else w + c
                    if w.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = w
        res = NormalForm.__new__(NormalForm)
        res.terms = out
        return res

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scaled(Scalar.coerce(other).inverse())

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = NormalForm.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = NormalForm.scalar(other)
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {IDENTITY_KEY}

    def scalar_part(self) -> Scalar:
        return self.terms.get(IDENTITY_KEY, ZERO)

    def is_diagonal(self) -> bool:
        return all(r == 0 and s == 0 for key in self.terms
                   for (_, r, s) in key)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def modes(self) -> set:
        out = set()
        for key in self.terms:
            for m, (t, r, s) in enumerate(key):
                if t or r or s:
                    out.add(m + 1)
        return out

    def inverse(self) -> "NormalForm":
        """Inverse of an invertible element: a single diagonal monomial."""
        if len(self.terms) != 1:
            raise ValueError("only single diagonal monomials are invertible")
        (key, coeff), = self.terms.items()
        if any(r or s for (_, r, s) in key):
            raise ValueError("only diagonal monomials are invertible")
        inv_key = tuple((-t, 0, 0) for (t, _, _) in key)
        return NormalForm({inv_key: coeff.inverse()})

    def root(self, k: int) -> "NormalForm":
        """Exact k-th root of a single diagonal monomial with coefficient 1."""
        if len(self.terms) != 1:
            raise ValueError("k-th roots exist only for single monomials")
        (key, coeff), = self.terms.items()
        if not coeff.is_one():
            raise ValueError("k-th root requires unit coefficient")
        if any(r or s for (_, r, s) in key):
            raise ValueError("k-th root requires a diagonal monomial")
        if any(t % k for (t, _, _) in key):
            raise ValueError(f"exponents not divisible by {k}")
        return NormalForm({tuple((t // k, 0, 0) for (t, _, _) in key): ONE})

    def number_commutator(self, weights: dict) -> "NormalForm":
        """Commutator [self, sum_m w_m N_m] computed from the grading:
        [monomial, N_m] = (s_m - r_m) * monomial."""
        out: dict = {}
        for key, c in self.terms.items():
            shift = ZERO
            for mode, w in weights.items():
                t, r, s = key[mode - 1]
                if s != r:
                    shift = shift + Scalar.coerce(w) * (s - r)
            if not shift.is_zero():
                out[key] = c * shift
        return NormalForm(out)

    def conserves_pair(self, modes: tuple) -> bool:
        """True when every monomial preserves the total occupation of the
        given mode pair."""
        for key in self.terms:
            delta = 0
            for m in modes:
                _, r, s = key[m - 1]
                delta += r - s
            if delta:
                return False
        return True

    def eval_exact(self, p) -> "NormalForm":
        p = Fraction(p)
        return NormalForm({k: v.eval_exact(p) for k, v in self.terms.items()})

    # -- printing ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            factors = []
            for m, (t, _, _) in enumerate(key):
                if t:
                    c_str = str(t // 2) if t % 2 == 0 else f"{t}/2"
                    factors.append(f"qpow({c_str},{m + 1})")
            for m, (_, r, _) in enumerate(key):
                if r:
                    factors.append(f"ad{m + 1}" + (f"^{r}" if r > 1 else ""))
            for m, (_, _, s) in enumerate(key):
                if s:
                    factors.append(f"a{m + 1}" + (f"^{s}" if s > 1 else ""))
            if not factors:
                parts.append(str(coeff))
                continue
            mono = "*".join(factors)
            if coeff.is_one():
                parts.append(mono)
            elif coeff == MINUS_ONE:
                parts.append("-" + mono)
            else:
                parts.append(f"{coeff.as_factor_str()}*{mono}")
        return _join_signed(parts)

    def __repr__(self):
        return f"NormalForm<{self}>"


def _join_signed(parts) -> str:
    out = parts[0]
    for t in parts[1:]:
        out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
    return out


# ---------------------------------------------------------------------------
# Normal ordering of expressions
# ---------------------------------------------------------------------------

def normal_order(e: Union[Expr, NormalForm], strategy: str = "left") -> NormalForm:
    """Reduce an expression to its canonical normal form.

    strategy chooses the product fold direction ("left" or "right"); the
    result is independent of it (confluence), which the test suite checks.
    """
    if isinstance(e, NormalForm):
        return e
    if isinstance(e, ScalarLit):
        return NormalForm.scalar(e.value)
    if isinstance(e, Gen):
        if e.kind == "N":
            raise ValueError("the bare number operator is only representable "
                             "inside q-power exponentials or on matrices")
        return NormalForm.generator(e.kind, e.mode)
    if isinstance(e, QPow):
        return NormalForm.qpow(e.thalf, e.mode)
    if isinstance(e, QNum):
        return NormalForm.scalar(qnum(e.n))
    if isinstance(e, Sum):
        out = NormalForm.zero()
        for t in e.terms:
            out = out + normal_order(t, strategy)
        return out
    if isinstance(e, Product):
        nfs = [normal_order(f, strategy) for f in e.factors]
        if not nfs:
            return NormalForm.one()
        if strategy == "right":
            out = nfs[-1]
            for nf in reversed(nfs[:-1]):
                out = nf * out
        else:
            out = nfs[0]
            for nf in nfs[1:]:
                out = out * nf
        return out
    if isinstance(e, Power):
        base = normal_order(e.base, strategy)
        if e.exponent >= 0:
            return base ** e.exponent
        return base.inverse() ** (-e.exponent)
    if isinstance(e, Bracket):
        x = normal_order(e.left, strategy)
        y = normal_order(e.right, strategy)
        if e.weight is None:
            return x * y - y * x
        w = normal_order(e.weight, strategy)
        if not w.is_scalar():
            raise ValueError("commutator weight must reduce to a scalar")
        return x * y - (y * x).scaled(w.scalar_part())
    raise TypeError(f"not an expression: {e!r}")


def commutator(x: NormalForm, y: NormalForm,
               weight: Optional[Scalar] = None) -> NormalForm:
    """x*y - y*x, or the weighted version x*y - w*y*x."""
    if weight is None:
        return x * y - y * x
    return x * y - (y * x).scaled(weight)


# ---------------------------------------------------------------------------
# Parser for the textual DSL
# ---------------------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message, line, col, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        hint = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"syntax error at line {line}, column {col}: "
                         f"{message}{hint}")


_SYMBOLS = "+-*^()[],/="


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.tokens = []
        self._run()
        self.index = 0

    def _error(self, msg):
        raise ParseError(msg, self.line, self.col)

    def _run(self):
        text = self.text
        n = len(text)
        while self.pos < n:
            ch = text[self.pos]
            if ch == "\n":
                self.pos += 1
                self.line += 1
                self.col = 1
                continue
            if ch.isspace():
                self.pos += 1
                self.col += 1
                continue
            start_line, start_col = self.line, self.col
            if ch.isdigit():
                j = self.pos
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("INT", text[self.pos:j],
                                    start_line, start_col))
                self.col += j - self.pos
                self.pos = j
                continue
            if ch.isalpha():
                j = self.pos
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("IDENT", text[self.pos:j],
                                    start_line, start_col))
                self.col += j - self.pos
                self.pos = j
                continue
            if ch in _SYMBOLS:
                self.tokens.append((ch, ch, start_line, start_col))
                self.pos += 1
                self.col += 1
                continue
            self._error(f"unexpected character {ch!r}")
        self.tokens.append(("EOF", "", self.line, self.col))

    def peek(self):
        return self.tokens[self.index]

    def next(self):
        tok = self.tokens[self.index]
        if tok[0] != "EOF":
            self.index += 1
        return tok


_ATOM_STARTERS = ("integer", "p", "q", "i", "sqrt2", "a<mode>", "ad<mode>",
                  "qpow(", "qnum(", "[", "(")


class _Parser:
    """Recursive descent parser for:

        expr   := ("+"|"-")? term (("+"|"-") term)*
        term   := factor ("*" factor)*
        factor := atom ("^" INT)?
        atom   := SCALAR | "p" | "q" | "i" | "sqrt2"
                | ("a"|"ad") MODE | "qpow(" HALFINT "," MODE ")"
                | "qnum(" INT ")" | "[" expr "," expr ("," "w=" expr)? "]"
                | "(" expr ")"
    """

    def __init__(self, text: str):
        self.toks = _Tokenizer(text)

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.toks.peek()
        if tok[0] != "EOF":
            raise ParseError(f"unexpected {tok[1]!r} after expression",
                             tok[2], tok[3], ("+", "-", "*", "^", "end"))
        return e

    def expr(self) -> Expr:
        terms = []
        tok = self.toks.peek()
        negate = False
        if tok[0] in ("+", "-"):
            self.toks.next()
            negate = tok[0] == "-"
        t = self.term()
        terms.append(Product((ScalarLit(MINUS_ONE), t)) if negate else t)
        while True:
            tok = self.toks.peek()
            if tok[0] not in ("+", "-"):
                break
            self.toks.next()
            t = self.term()
            terms.append(t if tok[0] == "+"
                         else Product((ScalarLit(MINUS_ONE), t)))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while self.toks.peek()[0] == "*":
            self.toks.next()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Expr:
        base = self.atom()
        if self.toks.peek()[0] == "^":
            self.toks.next()
            n = self._signed_int()
            return Power(base, n)
        return base

    def _signed_int(self) -> int:
        sign = 1
        tok = self.toks.peek()
        if tok[0] in ("+", "-"):
            self.toks.next()
            if tok[0] == "-":
                sign = -1
            tok = self.toks.peek()
        if tok[0] != "INT":
            raise ParseError(f"expected integer, found {tok[1]!r}",
                             tok[2], tok[3], ("integer",))
        self.toks.next()
        return sign * int(tok[1])

    def _expect(self, kind, what=None):
        tok = self.toks.peek()
        if tok[0] != kind:
            found = repr(tok[1]) if tok[1] else "end of input"
            raise ParseError(f"expected {what or kind}, found {found}",
                             tok[2], tok[3], (what or kind,))
        return self.toks.next()

    def atom(self) -> Expr:
        tok = self.toks.peek()
        kind, text, line, col = tok
        if kind == "INT":
            self.toks.next()
            numer = int(text)
            if self.toks.peek()[0] == "/":
                self.toks.next()
                dtok = self._expect("INT", "integer denominator")
                denom = int(dtok[1])
                if denom == 0:
                    raise ParseError("zero denominator in rational literal",
                                     dtok[2], dtok[3])
                return ScalarLit(Scalar.from_rational(Fraction(numer, denom)))
            return ScalarLit(Scalar.from_rational(numer))
        if kind == "IDENT":
            return self._ident_atom()
        if kind == "(":
            self.toks.next()
            e = self.expr()
            self._expect(")")
            return e
        if kind == "[":
            self.toks.next()
            left = self.expr()
            self._expect(",")
            right = self.expr()
            weight = None
            if self.toks.peek()[0] == ",":
                self.toks.next()
                wtok = self._expect("IDENT", "w")
                if wtok[1] != "w":
                    raise ParseError(f"expected 'w=', found {wtok[1]!r}",
                                     wtok[2], wtok[3], ("w=",))
                self._expect("=")
                weight = self.expr()
            self._expect("]")
            return Bracket(left, right, weight)
        found = repr(text) if text else "end of input"
        raise ParseError(f"unexpected {found}", line, col, _ATOM_STARTERS)

    def _ident_atom(self) -> Expr:
        kind, text, line, col = self.toks.next()
        from .scalars import I, P, Q, SQRT2
        if text == "p":
            return ScalarLit(P)
        if text == "q":
            return ScalarLit(Q)
        if text == "i":
            return ScalarLit(I)
        if text == "sqrt2":
            return ScalarLit(SQRT2)
        if text == "qpow":
            self._expect("(")
            numer = self._signed_int()
            thalf = 2 * numer
            if self.toks.peek()[0] == "/":
                self.toks.next()
                dtok = self._expect("INT", "2")
                if dtok[1] != "2":
                    raise ParseError("half-integer exponents must have "
                                     "denominator 2", dtok[2], dtok[3], ("2",))
                thalf = numer
            self._expect(",")
            mode = self._mode()
            self._expect(")")
            return QPow(thalf, mode)
        if text == "qnum":
            self._expect("(")
            n = self._signed_int()
            self._expect(")")
            return QNum(n)
        if text and text[0] == "a" and text != "ad":
            gk, rest = ("ad", text[2:]) if text.startswith("ad") else ("a", text[1:])
            if rest.isdigit() and 1 <= int(rest) <= NMODES:
                return Gen(gk, int(rest))
        raise ParseError(f"unknown symbol {text!r}", line, col, _ATOM_STARTERS)

    def _mode(self) -> int:
        tok = self._expect("INT", "mode 1..4")
        m = int(tok[1])
        if not 1 <= m <= NMODES:
            raise ParseError(f"mode {m} out of range 1..{NMODES}",
                             tok[2], tok[3], ("1", "2", "3", "4"))
        return m


def parse(text: str) -> Expr:
    """Parse DSL text to an expression tree; raises ParseError with
    line/column and the expected-token set on malformed input."""
    return _Parser(text).parse()


def parse_normal(text: str) -> NormalForm:
    return normal_order(parse(text))
