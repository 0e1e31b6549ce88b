"""
Chebyshev polynomials t_n(x) (first kind) and u_n(x) (second kind) for every
integer n, with exact integer coefficients.

Non-negative degrees come from sympy's ``dup_chebyshevt``/``dup_chebyshevu``
over ``ZZ``. Both kinds satisfy p_{n+1} = 2x·p_n - p_{n-1}, and running that
recurrence backwards fixes the negative degrees: t_{-n} = t_n, u_{-1} = 0 and
u_{-n} = -u_{n-2}.

The Binet-like forms are normalised as t_n = (λ^n + γ^n)/2 with
λ, γ = x ± √(x²-1). Writing t_n = x·(λ^n + γ^n)/(λ + γ) is the same thing
because λ + γ = 2x.
"""
import enum
import logging
from fractions import Fraction
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.orthopolys import dup_chebyshevt
from sympy.polys.orthopolys import dup_chebyshevu

from seqconv.exactmath import ZERO
from seqconv.exactmath import Polynomial
from seqconv.exactmath import to_rational

logger = logging.getLogger(__name__)


class ChebKind(enum.Enum):
    FIRST = "t"
    SECOND = "u"

    @classmethod
    def parse(cls, value) -> "ChebKind":
        if isinstance(value, cls):
            return value
        text = str(value).lower()
        for kind in cls:
            if text in (kind.value, kind.name.lower()):
                return kind
        raise ValueError("unknown Chebyshev kind %r (use 't' or 'u')" % (value,))


@lru_cache(maxsize=None)
def t(n: int) -> Polynomial:
    if n < 0:
        return t(-n)
    logger.debug("building t_%d", n)
    return Polynomial._new(dup_chebyshevt(n, ZZ), ZZ)


@lru_cache(maxsize=None)
def u(n: int) -> Polynomial:
    if n == -1:
        return ZERO
    if n < -1:
        return -u(-n - 2)
    logger.debug("building u_%d", n)
    return Polynomial._new(dup_chebyshevu(n, ZZ), ZZ)


_BUILDERS = {ChebKind.FIRST: t, ChebKind.SECOND: u}


def cheb_poly(kind, n: int) -> Polynomial:
    """
    :param kind: :class:`ChebKind` or one of ``"t"``, ``"u"``
    :param n: any integer
    """
    return _BUILDERS[ChebKind.parse(kind)](n)


def cheb_eval(kind, n: int, x0) -> Fraction:
    return cheb_poly(kind, n).evaluate(to_rational(x0))


def cheb_tu_relation_check(n: int) -> bool:
    """True iff t_n = (u_n - u_{n-2}) / 2 holds coefficient-wise."""
    return t(n) == (u(n) - u(n - 2)) / 2
