"""Exact scalar arithmetic: rationals, Laurent polynomials in p, their
fraction field, and the 4-dimensional extension by i and sqrt2.

The base variable is p with q = p^2, so half-integer powers of q are integer
powers of p and stay polynomial.  A Scalar is an element of
Q(p)[i, sqrt2] = Q(p) + Q(p)*i + Q(p)*sqrt2 + Q(p)*i*sqrt2,
which is a field (i^2 = -1, sqrt2^2 = 2).  All values are immutable and all
operations are pure functions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_FR0 = Fraction(0)
_FR1 = Fraction(1)


class EvaluationPoleError(ArithmeticError):
    """A denominator vanished at the requested evaluation point."""


# ---------------------------------------------------------------------------
# Laurent polynomials in p over Q
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial in p with rational coefficients, stored as integer
    coefficients over one common positive denominator (so the hot paths run
    on plain ints).

    Invariants: no zero coefficients; den > 0; gcd(content, den) = 1.
    """

    __slots__ = ("coeffs", "den")

    def __init__(self, coeffs=None):
        if not coeffs:
            self.coeffs, self.den = {}, 1
            return
        fracs = {k: Fraction(v) for k, v in coeffs.items()}
        common = 1
        for v in fracs.values():
            common = common * v.denominator // math.gcd(common,
                                                        v.denominator)
        ints = {k: int(v * common) for k, v in fracs.items()}
        self.coeffs, self.den = _poly_normalize(ints, common)

    @classmethod
    def _raw(cls, coeffs: dict, den: int) -> "LaurentPoly":
        res = cls.__new__(cls)
        res.coeffs, res.den = _poly_normalize(coeffs, den)
        return res

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return cls()
        return cls._raw({0: c.numerator}, c.denominator)

    @classmethod
    def unit(cls, k: int) -> "LaurentPoly":
        return cls._raw({k: 1}, 1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.den == 1 and self.coeffs == {0: 1}

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        return Fraction(self.coeffs.get(k, 0), self.den)

    def as_fraction_dict(self) -> dict:
        return {k: Fraction(v, self.den) for k, v in self.coeffs.items()}

    def __add__(self, other):
        d1, d2 = self.den, other.den
        if d1 == d2:
            out = dict(self.coeffs)
            for k, v in other.coeffs.items():
                w = out.get(k, 0) + v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
            return LaurentPoly._raw(out, d1)
        g = math.gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        out = {k: v * m1 for k, v in self.coeffs.items()}
        for k, v in other.coeffs.items():
            w = out.get(k, 0) + v * m2
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out, d1 * m1)

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {k: -v for k, v in self.coeffs.items()}
        res.den = self.den
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Fraction):
            if not other:
                return _LP_ZERO
            return LaurentPoly._raw(
                {k: v * other.numerator for k, v in self.coeffs.items()},
                self.den * other.denominator)
        out: dict = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return LaurentPoly._raw(out, self.den * other.den)

    def shifted(self, k: int) -> "LaurentPoly":
        if k == 0:
            return self
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e + k: v for e, v in self.coeffs.items()}
        res.den = self.den
        return res

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly)
                and self.den == other.den and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((frozenset(self.coeffs.items()), self.den))

    def evaluate(self, x: Fraction) -> Fraction:
        if not self.coeffs:
            return _FR0
        if x == 0:
            raise EvaluationPoleError("p = 0 is not a valid evaluation point")
        return sum((v * x ** k for k, v in self.coeffs.items()),
                   _FR0) / self.den

    def evaluate_complex(self, z: complex) -> complex:
        if not self.coeffs:
            return 0j
        if z == 0:
            raise EvaluationPoleError("p = 0 is not a valid evaluation point")
        return sum(v * z ** k for k, v in self.coeffs.items()) / self.den

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = Fraction(self.coeffs[k], self.den)
            if k == 0:
                parts.append(str(c))
            else:
                base = "p" if k == 1 else f"p^{k}"
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append("-" + base)
                else:
                    parts.append(f"{c}*{base}")
        return _join_signed(parts)

    def __repr__(self):
        return f"LaurentPoly({self.as_fraction_dict()!r})"


def _poly_normalize(coeffs: dict, den: int):
    coeffs = {k: v for k, v in coeffs.items() if v}
    if not coeffs:
        return {}, 1
    if den < 0:
        den = -den
        coeffs = {k: -v for k, v in coeffs.items()}
    g = den
    for v in coeffs.values():
        g = math.gcd(g, v)
        if g == 1:
            return coeffs, den
    return {k: v // g for k, v in coeffs.items()}, den // g


def _join_signed(parts) -> str:
    out = parts[0]
    for t in parts[1:]:
        out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
    return out


# Dense integer polynomial helpers for gcd reduction (primitive PRS: fast
# exact gcd without rational coefficient blowup).

def _int_dense(poly: LaurentPoly):
    shift = poly.min_exp()
    dense = [0] * (poly.max_exp() - shift + 1)
    for k, v in poly.coeffs.items():
        dense[k - shift] = v
    return dense, shift


def _int_content_strip(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            break
    if g > 1:
        a = [c // g for c in a]
    while a and not a[-1]:
        a.pop()
    return a


def _int_pseudo_rem(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        c = a[-1]
        off = len(a) - 1 - db
        a = [x * lb for x in a]
        for i, bc in enumerate(b):
            a[off + i] -= c * bc
        while a and not a[-1]:
            a.pop()
    return _int_content_strip(a)


def _int_gcd_poly(a, b):
    """Primitive gcd of integer polynomial coefficient lists."""
    A = _int_content_strip(list(a))
    B = _int_content_strip(list(b))
    if len(A) < len(B):
        A, B = B, A
    while B:
        A, B = B, _int_pseudo_rem(A, B)
    if A and A[-1] < 0:
        A = [-c for c in A]
    return A


def _int_divexact(a, b):
    """Exact division of integer polynomials (the quotient is integral
    whenever b is primitive and divides a)."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        f, r = divmod(a[-1], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        off = len(a) - 1 - db
        out[off] = f
        for i, c in enumerate(b):
            a[off + i] -= f * c
        while a and not a[-1]:
            a.pop()
    if a:
        raise ArithmeticError("inexact polynomial division")
    return out


# ---------------------------------------------------------------------------
# Fraction field Q(p)
# ---------------------------------------------------------------------------

class LaurentFrac:
    """Reduced fraction of Laurent polynomials in p.

    Canonical form: the denominator is an ordinary polynomial with nonzero
    constant term normalized to 1, and gcd(numerator, denominator) = 1; a
    denominator of 1 is stored as the constant polynomial 1.  Equality is
    plain component comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None, _reduced=False):
        if den is None:
            den = _LP_ONE
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in scalar fraction")
        if _reduced:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = _LP_ZERO, _LP_ONE
            return
        if den.is_one():
            self.num, self.den = num, den
            return
        ndense, a = _int_dense(num)
        ddense, b = _int_dense(den)
        g = _int_gcd_poly(ndense, ddense)
        if len(g) > 1:
            ndense = _int_divexact(ndense, g)
            ddense = _int_divexact(ddense, g)
        d0 = ddense[0]
        # canonical denominator: ordinary polynomial with constant term 1
        self.den = LaurentPoly._raw(
            {i: c for i, c in enumerate(ddense) if c}, d0)
        self.num = LaurentPoly._raw(
            {i + a - b: c * den.den for i, c in enumerate(ndense) if c},
            num.den * d0)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "LaurentFrac":
        return cls(p, _LP_ONE, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __add__(self, other):
        if not self.num.coeffs:
            return other
        if not other.num.coeffs:
            return self
        if self.den.is_one() and other.den.is_one():
            return LaurentFrac.from_poly(self.num + other.num)
        if self.den == other.den:
            return LaurentFrac(self.num + other.num, self.den)
        return LaurentFrac(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    def __neg__(self):
        res = LaurentFrac.__new__(LaurentFrac)
        res.num, res.den = -self.num, self.den
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return _LF_ZERO
        if self.den.is_one() and other.den.is_one():
            return LaurentFrac.from_poly(self.num * other.num)
        return LaurentFrac(self.num * other.num, self.den * other.den)

    def inverse(self) -> "LaurentFrac":
        if self.num.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        return LaurentFrac(self.den, self.num)

    def __eq__(self, other):
        return (isinstance(other, LaurentFrac)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, x: Fraction) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise EvaluationPoleError(f"denominator vanishes at p = {x}")
        return self.num.evaluate(x) / d

    def evaluate_complex(self, z: complex) -> complex:
        d = self.den.evaluate_complex(z)
        if d == 0:
            raise EvaluationPoleError(f"denominator vanishes at p = {z}")
        return self.num.evaluate_complex(z) / d

    def as_str(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})*({self.den})^-1"

    def is_single_term(self) -> bool:
        return self.den.is_one() and len(self.num.coeffs) <= 1

    __str__ = as_str

    def __repr__(self):
        return f"LaurentFrac({self.num!r}, {self.den!r})"


_LP_ZERO = LaurentPoly()
_LP_ONE = LaurentPoly({0: _FR1})
_LF_ZERO = LaurentFrac.from_poly(_LP_ZERO)
_LF_ONE = LaurentFrac.from_poly(_LP_ONE)


# ---------------------------------------------------------------------------
# Scalars: Q(p) extended by i and sqrt2
# ---------------------------------------------------------------------------

_BASIS_MARKERS = (None, "i", "sqrt2", "i*sqrt2")


class Scalar:
    """Element of Q(p)(i, sqrt2), stored as four Q(p) components on the
    basis {1, i, sqrt2, i*sqrt2}."""

    __slots__ = ("re", "im", "rt", "imrt")

    def __init__(self, re=_LF_ZERO, im=_LF_ZERO, rt=_LF_ZERO, imrt=_LF_ZERO):
        self.re, self.im, self.rt, self.imrt = re, im, rt, imrt

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, c) -> "Scalar":
        return cls(LaurentFrac.from_poly(LaurentPoly.const(c)))

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "Scalar":
        return cls(LaurentFrac.from_poly(p))

    @classmethod
    def p_power(cls, k: int) -> "Scalar":
        return cls(LaurentFrac.from_poly(LaurentPoly.unit(k)))

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return (self.re.is_zero() and self.im.is_zero()
                and self.rt.is_zero() and self.imrt.is_zero())

    def is_one(self) -> bool:
        return (self.re.is_one() and self.im.is_zero()
                and self.rt.is_zero() and self.imrt.is_zero())

    def is_real_rational_in_p(self) -> bool:
        return self.im.is_zero() and self.rt.is_zero() and self.imrt.is_zero()

    def __bool__(self):
        return not self.is_zero()

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = Scalar.coerce(other)
        if self._plain() and other._plain():
            return Scalar(self.re + other.re)
        return Scalar(self.re + other.re, self.im + other.im,
                      self.rt + other.rt, self.imrt + other.imrt)

    __radd__ = __add__

    def _plain(self) -> bool:
        return (self.im.num.coeffs == {} and self.rt.num.coeffs == {}
                and self.imrt.num.coeffs == {})

    def __neg__(self):
        if self._plain():
            return Scalar(-self.re)
        return Scalar(-self.re, -self.im, -self.rt, -self.imrt)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return (-self) + Scalar.coerce(other)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.from_rational(other)
            else:
                return NotImplemented
        a, b, c, d = self.re, self.im, self.rt, self.imrt
        e, f, g, h = other.re, other.im, other.rt, other.imrt
        if self._plain():
            if not a.num.coeffs:
                return ZERO
            if other._plain():
                return Scalar(a * e)
            return Scalar(a * e, a * f, a * g, a * h)
        if other._plain():
            if not e.num.coeffs:
                return ZERO
            return Scalar(a * e, b * e, c * e, d * e)
        two = _LF_TWO
        return Scalar(
            a * e - b * f + two * (c * g) - two * (d * h),
            a * f + b * e + two * (c * h) + two * (d * g),
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        conj_i = Scalar(self.re, -self.im, self.rt, -self.imrt)
        w = self * conj_i                      # lands in Q(p) + Q(p)*sqrt2
        u, v = w.re, w.rt
        norm = u * u - _LF_TWO * (v * v)       # in Q(p)
        ninv = norm.inverse()
        conj_rt = Scalar(u, _LF_ZERO, -v, _LF_ZERO)
        out = conj_i * conj_rt
        return Scalar(out.re * ninv, out.im * ninv,
                      out.rt * ninv, out.imrt * ninv)

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.re == other.re and self.im == other.im
                and self.rt == other.rt and self.imrt == other.imrt)

    def __hash__(self):
        return hash((self.re, self.im, self.rt, self.imrt))

    def conjugate_i(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.rt, -self.imrt)

    # -- evaluation ----------------------------------------------------------

    def eval_exact(self, p: Fraction) -> "Scalar":
        """Substitute a rational value for p; the result is a constant Scalar
        (still possibly carrying i and sqrt2 components)."""
        p = Fraction(p)
        return Scalar(
            LaurentFrac.from_poly(LaurentPoly.const(self.re.evaluate(p))),
            LaurentFrac.from_poly(LaurentPoly.const(self.im.evaluate(p))),
            LaurentFrac.from_poly(LaurentPoly.const(self.rt.evaluate(p))),
            LaurentFrac.from_poly(LaurentPoly.const(self.imrt.evaluate(p))),
        )

    def eval_float(self, p: complex) -> complex:
        root2 = math.sqrt(2.0)
        a = self.re.evaluate_complex(p)
        b = self.im.evaluate_complex(p)
        c = self.rt.evaluate_complex(p)
        d = self.imrt.evaluate_complex(p)
        return a + c * root2 + 1j * (b + d * root2)

    # -- printing -------------------------------------------------------------

    def __str__(self):
        parts = []
        for frac, marker in zip((self.re, self.im, self.rt, self.imrt),
                                _BASIS_MARKERS):
            if frac.is_zero():
                continue
            if marker is None:
                parts.append(frac.as_str())
            elif frac.is_one():
                parts.append(marker)
            elif frac == _LF_MINUS_ONE:
                parts.append("-" + marker)
            elif frac.is_single_term():
                parts.append(f"{frac.as_str()}*{marker}")
            else:
                parts.append(f"({frac.as_str()})*{marker}")
        if not parts:
            return "0"
        return _join_signed(parts)

    def __repr__(self):
        return f"Scalar({self})"

    def is_single_product(self) -> bool:
        """True when str(self) is a pure product (no top-level sum), so it can
        be used as a factor without parentheses."""
        nonzero = [f for f in (self.re, self.im, self.rt, self.imrt)
                   if not f.is_zero()]
        if len(nonzero) != 1:
            return False
        f = nonzero[0]
        return not f.den.is_one() or len(f.num.coeffs) <= 1

    def as_factor_str(self) -> str:
        s = str(self)
        return s if self.is_single_product() else f"({s})"


_LF_TWO = LaurentFrac.from_poly(LaurentPoly.const(2))
_LF_MINUS_ONE = LaurentFrac.from_poly(LaurentPoly.const(-1))

ZERO = Scalar()
ONE = Scalar.from_rational(1)
MINUS_ONE = Scalar.from_rational(-1)
TWO = Scalar.from_rational(2)
HALF = Scalar.from_rational(Fraction(1, 2))
I = Scalar(_LF_ZERO, _LF_ONE)
SQRT2 = Scalar(_LF_ZERO, _LF_ZERO, _LF_ONE)
P = Scalar.p_power(1)
Q = Scalar.p_power(2)
QINV = Scalar.p_power(-2)
Q_MINUS_QINV = Q - QINV


@lru_cache(maxsize=None)
def _p_power_cached(k: int) -> Scalar:
    return Scalar.p_power(k)


def p_power(k: int) -> Scalar:
    return _p_power_cached(k)


class QValue:
    """Rational evaluation point for p (the deformation parameter is q = p^2)."""

    __slots__ = ("p",)

    def __init__(self, p):
        p = Fraction(p)
        if p == 0:
            raise ValueError("p must be nonzero")
        self.p = p

    @property
    def q(self) -> Fraction:
        return self.p * self.p

    def is_classical(self) -> bool:
        return self.p in (1, -1)

    def __eq__(self, other):
        return isinstance(other, QValue) and self.p == other.p

    def __hash__(self):
        return hash(("QValue", self.p))

    def __repr__(self):
        return f"QValue({self.p})"

    def __str__(self):
        return str(self.p)


@lru_cache(maxsize=None)
def qnum(n: int) -> Scalar:
    """q-integer [n] = (q^n - q^-n)/(q - q^-1) as an exact Laurent polynomial
    in p, computed by symbolic division so p = 1 stays a valid evaluation
    point: [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qnum(-n)
    coeffs = {2 * k: _FR1 for k in range(-(n - 1), n, 2)}
    return Scalar.from_poly(LaurentPoly(coeffs))


def qnum_at(n: int, qv: QValue) -> Fraction:
    """q-integer evaluated at a rational point (exact)."""
    if n == 0:
        return _FR0
    return qnum(n).re.evaluate(qv.p)


def qfactorial(n: int) -> Scalar:
    out = ONE
    for k in range(2, n + 1):
        out = out * qnum(k)
    return out


def eval_float(s: Scalar, p: complex, branch: str = "principal") -> complex:
    """Numeric evaluation: substitutes p, maps i to the imaginary unit and
    sqrt2 to the positive square root."""
    if branch != "principal":
        raise ValueError("only the principal branch is supported")
    return s.eval_float(p)
