"""
Exact scalars: rationals, elements of a quadratic field Q(√d) and dense
univariate polynomials with rational coefficients.

Rationals are plain :class:`fractions.Fraction` values (always reduced, with a
positive denominator). Polynomials run on sympy's dense ``dup`` arithmetic and
stay over ``ZZ`` while integral, so integer families such as the Chebyshev
polynomials never pay for rational coefficients.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable
from typing import Optional
from typing import Tuple
from typing import Union

from sympy import Poly
from sympy import Symbol
from sympy import sstr
from sympy.polys.densearith import dup_add
from sympy.polys.densearith import dup_div
from sympy.polys.densearith import dup_mul
from sympy.polys.densearith import dup_mul_ground
from sympy.polys.densearith import dup_neg
from sympy.polys.densearith import dup_pow
from sympy.polys.densearith import dup_quo_ground
from sympy.polys.densearith import dup_sub
from sympy.polys.densebasic import dup_convert
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_eval
from sympy.polys.densetools import dup_scale
from sympy.polys.domains import QQ
from sympy.polys.domains import ZZ

from seqconv.exceptions import InexactDivisionError
from seqconv.exceptions import PreconditionError
from seqconv.exceptions import RadicandError
from seqconv.exceptions import RadicandMismatchError
from seqconv.exceptions import ScalarMismatchError

logger = logging.getLogger(__name__)

Rational = Fraction
Coefficient = Union[int, Fraction]
X = Symbol("x")


def to_rational(value) -> Fraction:
    """Convert an int, a Fraction or a ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise ScalarMismatchError("%r is not a rational value" % (value,))


def rational_sqrt(value) -> Optional[Fraction]:
    """
    Exact square root of a non-negative rational.

    :param value: the rational to take the root of
    :return: the root, or None when ``value`` is not the square of a rational
    """
    value = to_rational(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = isqrt(num), isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def is_rational_square(value) -> bool:
    return rational_sqrt(value) is not None


@lru_cache(maxsize=None)
def _checked_radicand(d: Fraction) -> Fraction:
    # d is reduced, so it is a square iff numerator and denominator both are
    if rational_sqrt(d) is not None:
        raise RadicandError(d)
    return d


class QuadExt:
    """
    An element ``a + b·√d`` of the quadratic field Q(√d).

    The radicand is fixed per value; combining values with different radicands
    raises :class:`RadicandMismatchError` instead of embedding silently.
    Rationals (``int`` or ``Fraction``) are promoted to ``a + 0·√d``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.d = _checked_radicand(to_rational(d))
        self.a = to_rational(a)
        self.b = to_rational(b)

    @classmethod
    def _new(cls, a: Fraction, b: Fraction, d: Fraction) -> "QuadExt":
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj.d = d
        return obj

    @classmethod
    def sqrt(cls, d) -> "QuadExt":
        """Return √d itself."""
        return cls(0, 1, d)

    def __reduce__(self):
        return (QuadExt, (self.a, self.b, self.d))

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise RadicandMismatchError(self.d, other.d)
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt._new(Fraction(other), Fraction(0), self.d)
        if isinstance(other, Polynomial):
            raise ScalarMismatchError("cannot combine a quadratic-field element with a polynomial")
        return NotImplemented

    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt._new(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExt":
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("zero has no inverse in Q(sqrt(%s))" % self.d)
        return QuadExt._new(self.a / norm, -self.b / norm, self.d)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt._new(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._new(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt._new(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt._new(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = QuadExt._new(Fraction(1), Fraction(0), self.d)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return "QuadExt({!s}, {!s}, {!s})".format(self.a, self.b, self.d)

    def __str__(self):
        return "{!s} + {!s}*sqrt({!s})".format(self.a, self.b, self.d)


def quad_mul(u: QuadExt, v: QuadExt) -> QuadExt:
    if not (isinstance(u, QuadExt) and isinstance(v, QuadExt)):
        raise ScalarMismatchError("quad_mul expects two QuadExt values")
    return u * v


def quad_inv(u: QuadExt) -> QuadExt:
    return u.inverse()


def _qq(value):
    value = to_rational(value)
    return QQ(value.numerator, value.denominator)


def _from_domain(c) -> Coefficient:
    num, den = int(c.numerator), int(c.denominator)
    return num if den == 1 else Fraction(num, den)


def _canonical(rep: list, domain) -> Tuple[list, object]:
    """Strip ``rep`` and move it to ZZ when every coefficient is integral."""
    rep = dup_strip(rep)
    if domain == QQ and all(c.denominator == 1 for c in rep):
        return dup_convert(rep, QQ, ZZ), ZZ
    return rep, domain


class Polynomial:
    """
    Univariate polynomial over Q, held as a dense sympy ``dup`` list
    (highest degree first) over ``ZZ`` when integral and ``QQ`` otherwise.

    The public view is :attr:`coefficients`, lowest degree first, with ``int``
    for integral coefficients and ``Fraction`` for the rest. The zero
    polynomial has no coefficients and degree -1.
    """

    __slots__ = ("rep", "domain")

    def __init__(self, coefficients: Iterable = ()):
        rep = [_qq(c) for c in reversed(list(coefficients))]
        self.rep, self.domain = _canonical(rep, QQ)

    @classmethod
    def _new(cls, rep: list, domain) -> "Polynomial":
        obj = object.__new__(cls)
        obj.rep, obj.domain = _canonical(rep, domain)
        return obj

    @classmethod
    def from_sympy(cls, expr) -> "Polynomial":
        """Build from a sympy expression or ``Poly`` in ``x``."""
        poly = Poly(expr, X, domain=QQ)
        return cls._new([QQ.from_sympy(c) for c in poly.all_coeffs()], QQ)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._new([ZZ.one, ZZ.zero], ZZ)

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    def __reduce__(self):
        return (Polynomial, (self.coefficients,))

    def as_poly(self) -> Poly:
        return Poly(self.rep or [0], X, domain=self.domain)

    def as_expr(self):
        return self.as_poly().as_expr()

    @property
    def coefficients(self) -> Tuple[Coefficient, ...]:
        return tuple(_from_domain(c) for c in reversed(self.rep))

    @property
    def degree(self) -> int:
        return len(self.rep) - 1

    @property
    def leading(self) -> Coefficient:
        return _from_domain(self.rep[0]) if self.rep else 0

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self):
        return bool(self.rep)

    def __getitem__(self, index: int) -> Coefficient:
        if 0 <= index < len(self.rep):
            return _from_domain(self.rep[-1 - index])
        return 0

    def _in(self, domain) -> list:
        return self.rep if domain == self.domain else dup_convert(self.rep, self.domain, domain)

    def _unify(self, other: "Polynomial") -> Tuple[list, list, object]:
        domain = self.domain if self.domain == other.domain else QQ
        return self._in(domain), other._in(domain), domain

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        if isinstance(other, QuadExt):
            raise ScalarMismatchError("cannot combine a polynomial with a quadratic-field element")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f, g, domain = self._unify(other)
        return Polynomial._new(dup_add(f, g, domain), domain)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._new(dup_neg(self.rep, self.domain), self.domain)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f, g, domain = self._unify(other)
        return Polynomial._new(dup_sub(f, g, domain), domain)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def _scale(self, factor) -> "Polynomial":
        factor = to_rational(factor)
        if factor.denominator == 1 and self.domain == ZZ:
            return Polynomial._new(dup_mul_ground(self.rep, ZZ(factor.numerator), ZZ), ZZ)
        return Polynomial._new(dup_mul_ground(self._in(QQ), _qq(factor), QQ), QQ)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f, g, domain = self._unify(other)
        return Polynomial._new(dup_mul(f, g, domain), domain)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers of a polynomial are not polynomials")
        return Polynomial._new(dup_pow(self.rep, exponent, self.domain), self.domain)

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Euclidean division over Q: ``self = quotient·divisor + remainder``."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = dup_div(self._in(QQ), divisor._in(QQ), QQ)
        return Polynomial._new(quotient, QQ), Polynomial._new(remainder, QQ)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Polynomial._new(dup_quo_ground(self._in(QQ), _qq(other), QQ), QQ)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        quotient, remainder = self.divmod(other)
        if remainder:
            raise InexactDivisionError("%s does not divide %s" % (other, self))
        return quotient

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def evaluate(self, x0) -> Fraction:
        """Value at a rational point."""
        return Fraction(_from_domain(dup_eval(self._in(QQ), _qq(x0), QQ)))

    __call__ = evaluate

    def scale_argument(self, factor) -> "Polynomial":
        """Return p(factor·x)."""
        return Polynomial._new(dup_scale(self._in(QQ), _qq(factor), QQ), QQ)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.rep
            return len(self.rep) == 1 and self.rep[0] == _qq(other)
        return NotImplemented

    def __hash__(self):
        if len(self.rep) <= 1:
            return hash(self[0])
        return hash(self.coefficients)

    def __repr__(self):
        return "Polynomial([{}])".format(", ".join(str(c) for c in self.coefficients))

    def __str__(self):
        return sstr(self.as_expr())


ZERO = Polynomial._new([], ZZ)
ONE = Polynomial._new([ZZ.one], ZZ)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, x0) -> Fraction:
    return p.evaluate(x0)


ExactScalar = Union[Fraction, QuadExt, Polynomial]

RATIONAL = "rational"
QUADRATIC = "quadratic"
POLYNOMIAL = "polynomial"


def as_scalar(value) -> ExactScalar:
    """Normalize ints and ``"p/q"`` strings to Fraction; other scalars pass through."""
    if isinstance(value, (QuadExt, Polynomial, Fraction)):
        return value
    return to_rational(value)


def variant_of(value) -> str:
    if isinstance(value, (int, Fraction)):
        return RATIONAL
    if isinstance(value, QuadExt):
        return QUADRATIC
    if isinstance(value, Polynomial):
        return POLYNOMIAL
    raise ScalarMismatchError("%r is not an exact scalar" % (value,))


def common_variant(*values) -> str:
    """
    The variant shared by ``values`` once rationals are promoted.

    Raises :class:`ScalarMismatchError` when a quadratic-field element meets a
    polynomial, and :class:`RadicandMismatchError` for differing radicands.
    """
    found = RATIONAL
    radicand = None
    for value in values:
        kind = variant_of(value)
        if kind == RATIONAL:
            continue
        if found not in (RATIONAL, kind):
            raise ScalarMismatchError("mixed %s and %s scalars" % (found, kind))
        found = kind
        if kind == QUADRATIC:
            if radicand is not None and value.d != radicand:
                raise RadicandMismatchError(radicand, value.d)
            radicand = value.d
    return found


def geom_ratio_sum(x, z, n: int) -> ExactScalar:
    """
    Exact value of sum_{k=0}^{n} x^k z^(n-k).

    Uses ``(x^(n+1) - z^(n+1)) / (x - z)`` and the coincident limit
    ``(n+1)·x^n`` when ``x == z``.
    """
    if n < 0:
        raise PreconditionError("n must be >= 0, got %d" % n)
    x, z = as_scalar(x), as_scalar(z)
    common_variant(x, z)
    if x == z:
        return (n + 1) * x ** n
    return (x ** (n + 1) - z ** (n + 1)) / (x - z)
