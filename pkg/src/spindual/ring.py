"""Exact scalar arithmetic: Gaussian rationals, Laurent polynomials in the
formal variable v (with q = v^2), and reduced rational functions.

All coefficients that show up in this project live in the field
Q(i)(v): quantum integers, half-integer powers of q (= odd powers of v),
and the imaginary unit needed for the substitution q -> -q^2.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""


def _as_q(x):
    if isinstance(x, (int,)):
        return Q(x)
    return x


class GaussRat:
    """Gaussian rational a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_q(re)
        self.im = _as_q(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.re == other and not self.im
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussRat(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        return GaussRat(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    def conj(self):
        return GaussRat(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inv(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero GaussRat")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = GR_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_integer(self):
        return self.re.denominator == 1 and self.im.denominator == 1

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)

# i^e for e mod 4
_I_POW = (GR_ONE, GR_I, -GR_ONE, -GR_I)


class LaurentPoly:
    """Laurent polynomial in v with GaussRat coefficients.

    Stored as {exponent: coefficient} with no zero coefficients;
    the empty dict is the zero polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = coeffs if coeffs is not None else {}

    @staticmethod
    def const(c: GaussRat) -> "LaurentPoly":
        return LaurentPoly({0: c} if c else {})

    @staticmethod
    def monomial(exp: int, coeff=GR_ONE) -> "LaurentPoly":
        return LaurentPoly({exp: coeff} if coeff else {})

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs.get(0) == GR_ONE

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return LP_ZERO
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                p = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = p
                else:
                    s = s + p
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return LaurentPoly(out)

    def scale(self, c: GaussRat):
        if not c:
            return LP_ZERO
        return LaurentPoly({e: k * c for e, k in self.coeffs.items()})

    def shift(self, n: int):
        """Multiply by v^n."""
        return LaurentPoly({e + n: c for e, c in self.coeffs.items()})

    def valuation(self):
        return min(self.coeffs) if self.coeffs else 0

    def degree(self):
        return max(self.coeffs) if self.coeffs else 0

    def leading(self) -> GaussRat:
        return self.coeffs[self.degree()]

    def trailing(self) -> GaussRat:
        return self.coeffs[self.valuation()]

    def is_monomial(self):
        return len(self.coeffs) == 1

    def evaluate(self, v0: GaussRat) -> GaussRat:
        out = GR_ZERO
        for e, c in self.coeffs.items():
            out = out + c * (v0 ** e)
        return out

    def subst_iv2(self):
        """The substitution v -> i*v^2 (i.e. q -> -q^2) on a bare polynomial."""
        out = {}
        for e, c in self.coeffs.items():
            out[2 * e] = c * _I_POW[e % 4]
        return LaurentPoly(out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c!r}")
            elif e == 1:
                parts.append(f"{c!r}*v")
            else:
                parts.append(f"{c!r}*v^{e}")
        return " + ".join(parts)


LP_ZERO = LaurentPoly({})
LP_ONE = LaurentPoly({0: GR_ONE})


def _poly_divmod(a: LaurentPoly, b: LaurentPoly):
    """Division with remainder for ordinary (nonnegative-exponent) polynomials."""
    rem = dict(a.coeffs)
    db = b.degree()
    lb = b.leading().inv()
    quot = {}
    while rem:
        da = max(rem)
        if da < db:
            break
        f = rem[da] * lb
        quot[da - db] = f
        for e, c in b.coeffs.items():
            t = e + da - db
            s = rem.get(t, GR_ZERO) - c * f
            if s:
                rem[t] = s
            elif t in rem:
                del rem[t]
    return LaurentPoly(quot), LaurentPoly(rem)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd, ignoring v-monomial factors (units in the Laurent ring)."""
    a = a.shift(-a.valuation()) if a else LP_ZERO
    b = b.shift(-b.valuation()) if b else LP_ZERO
    while b:
        a, b = b, _poly_divmod(a, b)[1]
        if b:
            b = b.shift(-b.valuation())
    if not a:
        return LP_ZERO
    return a.scale(a.leading().inv())


class Scalar:
    """Reduced rational function num/den in v over the Gaussian rationals.

    Canonical form: gcd(num, den) = 1 up to units, den has valuation 0 and
    trailing coefficient 1.  Equality is then structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = LP_ONE, reduce=True):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = LP_ZERO
            self.den = LP_ONE
            return
        if reduce and not den.is_one():
            if den.is_monomial():
                e = den.valuation()
                c = den.trailing().inv()
                num = num.shift(-e).scale(c)
                den = LP_ONE
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = _poly_divmod(num.shift(-num.valuation()), g)[0].shift(num.valuation())
                    den = _poly_divmod(den.shift(-den.valuation()), g)[0].shift(den.valuation())
                # normalize: den valuation 0, trailing coefficient 1
                e = den.valuation()
                c = den.trailing().inv()
                num = num.shift(-e).scale(c)
                den = den.shift(-e).scale(c)
                if den.is_monomial():
                    den = LP_ONE
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------
    @staticmethod
    def from_int(n: int) -> "Scalar":
        return Scalar(LaurentPoly.const(GaussRat(n)), LP_ONE, reduce=False)

    @staticmethod
    def from_gauss(c: GaussRat) -> "Scalar":
        return Scalar(LaurentPoly.const(c), LP_ONE, reduce=False)

    @staticmethod
    def v_power(e: int) -> "Scalar":
        return Scalar(LaurentPoly.monomial(e), LP_ONE, reduce=False)

    # -- predicates --------------------------------------------------------
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.den.is_one() and self.num.is_one()

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Scalar.from_int(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if self.den is LP_ONE and other.den is LP_ONE or \
           (self.den.is_one() and other.den.is_one()):
            return Scalar(self.num + other.num, LP_ONE, reduce=False)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __neg__(self):
        return Scalar(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, LP_ONE, reduce=False)
        return Scalar(self.num * other.num, self.den * other.den)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- the paper-level operations ---------------------------------------
    def substitute_neg_qsq(self) -> "Scalar":
        """Ring homomorphism v -> i*v^2, i.e. q -> -q^2 with (-q^2)^(1/2) = i*q."""
        return Scalar(self.num.subst_iv2(), self.den.subst_iv2())

    def specialize(self, v0: GaussRat) -> GaussRat:
        """Exact evaluation at v = v0; raises PoleError on a denominator zero."""
        if not v0:
            raise PoleError("v0 = 0 is never a valid specialization point")
        d = self.den.evaluate(v0)
        if not d:
            raise PoleError(f"denominator vanishes at v0 = {v0!r}")
        return self.num.evaluate(v0) / d

    def is_laurent(self):
        """True if the scalar is a Laurent polynomial (trivial denominator)."""
        return self.den.is_one()

    def has_gaussian_integer_coeffs(self):
        return self.den.is_one() and all(c.is_integer() for c in self.num.coeffs.values())

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


ZERO = Scalar.from_int(0)
ONE = Scalar.from_int(1)
TWO = Scalar.from_int(2)
I = Scalar.from_gauss(GR_I)
V = Scalar.v_power(1)
QQ = Scalar.v_power(2)          # the deformation parameter q = v^2
HALF = Scalar(LaurentPoly.const(GaussRat(Q(1, 2))), LP_ONE, reduce=False)


def sc(n: int) -> Scalar:
    return Scalar.from_int(n)


def q_power(e2: int) -> Scalar:
    """q^(e2/2) as a monomial in v: handles half-integer powers of q exactly."""
    return Scalar.v_power(e2)


def qint(n, base: Scalar = None) -> Scalar:
    """Quantum integer [n] = (base^n - base^-n)/(base - base^-1).

    `n` may be an int or a half-integer given as an exact ratio p/2 via a
    2-tuple (p, 2); with the default base q = v^2 half-integer powers are
    odd powers of v.  [-n] = -[n] and [0] = 0, [1] = 1.
    """
    if base is None:
        base = QQ
    if isinstance(n, tuple):
        p, two = n
        if two != 2:
            raise ValueError("half-integer arguments must be given as (p, 2)")
        if not base.num.is_monomial() or not base.is_laurent():
            raise ValueError("half-integer quantum integers need a monomial base")
        e = base.num.valuation()
        if e % 2:
            raise ValueError("base has no square root in v")
        c = base.num.trailing()
        if c != GR_ONE:
            raise ValueError("base must be a plain power of v")
        root = Scalar.v_power(e // 2)
        return (root ** p - root ** (-p)) / (base - base.inv())
    d = base - base.inv()
    if not d:
        raise ZeroDivisionError("quantum integer undefined: base - base^-1 = 0")
    return (base ** n - base ** (-n)) / d


def qint_plus(n) -> Scalar:
    """The shifted symbol [n]^+ = i(q^n + q^-n)/(q - q^-1), n an int or (p, 2)."""
    if isinstance(n, tuple):
        p, _ = n
        top = Scalar.v_power(p) + Scalar.v_power(-p)
    else:
        top = QQ ** n + QQ ** (-n)
    return I * top / (QQ - QQ.inv())


def qfactorial(n: int, base: Scalar) -> Scalar:
    out = ONE
    for m in range(2, n + 1):
        out = out * qint(m, base)
    return out


def qbinom(n: int, k: int, base: Scalar) -> Scalar:
    return qfactorial(n, base) / (qfactorial(k, base) * qfactorial(n - k, base))
