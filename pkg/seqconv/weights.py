"""
Symmetric weights T(n, k) = T(n, n-k) and their row sums.

A symmetric weight passes through a U·V convolution as a pure row-sum factor,
so every family here carries its exact value and, where one is known, a
closed form for sum_{k=0}^{n} T(n, k).
"""
import logging
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable
from typing import Optional
from typing import Tuple

from sympy import bernoulli

from seqconv import chebyshev
from seqconv.exactmath import X
from seqconv.exactmath import ExactScalar
from seqconv.exactmath import Polynomial
from seqconv.exactmath import to_rational
from seqconv.exceptions import UnsupportedClosedFormError
from seqconv.exceptions import WeightContextError
from seqconv.exceptions import WeightDomainError
from seqconv.sequences import HoradamSeq
from seqconv.sequences import lucas_u
from seqconv.sequences import lucas_v

logger = logging.getLogger(__name__)

NEEDS_R = "r"
NEEDS_LUCAS = "lucas"


@dataclass(frozen=True)
class WeightContext:
    """
    What a weight may depend on besides (n, k): the stride r and the Lucas
    parameters (p, q) of the U/V sequences used by sequence-valued weights.
    """

    r: Optional[int] = None
    p: Optional[Fraction] = None
    q: Optional[Fraction] = None

    def __post_init__(self):
        if self.p is not None:
            object.__setattr__(self, "p", to_rational(self.p))
        if self.q is not None:
            object.__setattr__(self, "q", to_rational(self.q))

    @property
    def has_lucas(self) -> bool:
        return self.p is not None and self.q is not None

    def U(self) -> HoradamSeq:
        if not self.has_lucas:
            raise WeightContextError("weight needs Lucas parameters (p, q)")
        return lucas_u(self.p, self.q)

    def V(self) -> HoradamSeq:
        if not self.has_lucas:
            raise WeightContextError("weight needs Lucas parameters (p, q)")
        return lucas_v(self.p, self.q)


def _every_n(ctx: WeightContext, n: int) -> bool:
    return n >= 0


@dataclass(frozen=True)
class WeightFamily:
    name: str
    value: Callable[[WeightContext, int, int], ExactScalar]
    closed_sum: Optional[Callable[[WeightContext, int], ExactScalar]] = None
    domain: Callable[[WeightContext, int], bool] = _every_n
    needs: Tuple[str, ...] = ()
    polynomial: bool = False
    description: str = ""
    anchor: str = ""

    def __repr__(self):
        return "<WeightFamily %s>" % self.name


def _check(family: WeightFamily, ctx: WeightContext, n: int):
    if NEEDS_R in family.needs and ctx.r is None:
        raise WeightContextError("weight %s needs the stride r" % family.name)
    if NEEDS_LUCAS in family.needs and not ctx.has_lucas:
        raise WeightContextError("weight %s needs Lucas parameters (p, q)" % family.name)
    if not family.domain(ctx, n):
        raise WeightDomainError("n = %d is outside the domain of weight %s" % (n, family.name))


def in_domain(family: WeightFamily, ctx: WeightContext, n: int) -> bool:
    try:
        _check(family, ctx, n)
    except (WeightContextError, WeightDomainError):
        return False
    return True


def weight_value(family: WeightFamily, ctx: WeightContext, n: int, k: int) -> ExactScalar:
    if not 0 <= k <= n:
        raise WeightDomainError("k = %d is outside [0, %d]" % (k, n))
    _check(family, ctx, n)
    return family.value(ctx, n, k)


def weight_sum_brute(family: WeightFamily, ctx: WeightContext, n: int) -> ExactScalar:
    _check(family, ctx, n)
    total = family.value(ctx, n, 0)
    for k in range(1, n + 1):
        total = total + family.value(ctx, n, k)
    return total


def weight_sum_closed(family: WeightFamily, ctx: WeightContext, n: int) -> ExactScalar:
    if family.closed_sum is None:
        raise UnsupportedClosedFormError("weight %s has no closed row sum" % family.name)
    _check(family, ctx, n)
    return family.closed_sum(ctx, n)


@lru_cache(maxsize=None)
def bernoulli_poly(m: int) -> Polynomial:
    """Bernoulli polynomial B_m(x), with B_1(x) = x - 1/2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return Polynomial.from_sympy(bernoulli(m, X))


def agoh_dilcher_rhs(n: int) -> Polynomial:
    """n(2x-1)·B_{n-1}(2x) - (n-1)·B_n(2x); the first term vanishes at n = 0."""
    tail = (n - 1) * bernoulli_poly(n).scale_argument(2)
    if n == 0:
        return -tail
    return n * Polynomial((-1, 2)) * bernoulli_poly(n - 1).scale_argument(2) - tail


def _r_positive(ctx: WeightContext, n: int) -> bool:
    return n >= 0 and ctx.r is not None and ctx.r >= 1


def _lucas_uu_domain(ctx: WeightContext, n: int) -> bool:
    if not _r_positive(ctx, n) or not ctx.has_lucas:
        return False
    return ctx.p * ctx.p - 4 * ctx.q != 0 and ctx.U()[ctx.r] != 0


def _lucas_vv_domain(ctx: WeightContext, n: int) -> bool:
    return _r_positive(ctx, n) and ctx.has_lucas and ctx.U()[ctx.r] != 0


def _lucas_uu_sum(ctx: WeightContext, n: int) -> Fraction:
    U, V, r = ctx.U(), ctx.V(), ctx.r
    delta = ctx.p * ctx.p - 4 * ctx.q
    return ((n + 1) * U[r] * V[r * n] - 2 * U[r * (n + 1)]) / (delta * U[r])


def _lucas_vv_sum(ctx: WeightContext, n: int) -> Fraction:
    U, V, r = ctx.U(), ctx.V(), ctx.r
    return ((n + 1) * U[r] * V[r * n] + 2 * U[r * (n + 1)]) / U[r]


def _cheb_tt_sum(ctx: WeightContext, n: int) -> Polynomial:
    t, u, r = chebyshev.t, chebyshev.u, ctx.r
    return ((n + 1) * u(r - 1) * t(r * n) + u(r * n + r - 1)) / (2 * u(r - 1))


def _cheb_uu_sum(ctx: WeightContext, n: int) -> Polynomial:
    t, u, r = chebyshev.t, chebyshev.u, ctx.r
    x2_minus_1 = Polynomial((-1, 0, 1))
    return ((n + 1) * u(r - 1) * t(r * n + 2) - u(r * n + r - 1)) / (2 * x2_minus_1 * u(r - 1))


_FAMILIES = [
    WeightFamily(
        "constant",
        lambda ctx, n, k: Fraction(1),
        lambda ctx, n: Fraction(n + 1),
        description="T(n,k) = 1",
        anchor="weight 1 recovers the U·V convolution (n+1)U_{rn}",
    ),
    WeightFamily(
        "k_nk",
        lambda ctx, n, k: Fraction(k * (n - k)),
        lambda ctx, n: Fraction((n - 1) * n * (n + 1), 6),
        description="T(n,k) = k(n-k)",
        anchor="sum k(n-k) = (n-1)n(n+1)/6",
    ),
    WeightFamily(
        "k2_nk2",
        lambda ctx, n, k: Fraction((k * (n - k)) ** 2),
        lambda ctx, n: Fraction(n * (n ** 4 - 1), 30),
        description="T(n,k) = k^2(n-k)^2",
        anchor="sum k^2(n-k)^2 = n(n^4-1)/30",
    ),
    WeightFamily(
        "binomial",
        lambda ctx, n, k: Fraction(comb(n, k)),
        lambda ctx, n: Fraction(2 ** n),
        description="T(n,k) = C(n,k)",
        anchor="sum C(n,k) = 2^n",
    ),
    WeightFamily(
        "binomial_squared",
        lambda ctx, n, k: Fraction(comb(n, k) ** 2),
        lambda ctx, n: Fraction(comb(2 * n, n)),
        description="T(n,k) = C(n,k)^2",
        anchor="sum C(n,k)^2 = C(2n,n)",
    ),
    WeightFamily(
        "binomial_2n_2k",
        lambda ctx, n, k: Fraction(comb(2 * n, 2 * k)),
        lambda ctx, n: Fraction(2) ** (2 * n - 1),
        # the printed row sum 2^(2n-1) gives 1/2 at n = 0, the true sum is 1
        domain=lambda ctx, n: n >= 1,
        description="T(n,k) = C(2n,2k), n >= 1",
        anchor="sum C(2n,2k) = 2^(2n-1)",
    ),
    WeightFamily(
        "binomial_3n_3k",
        lambda ctx, n, k: Fraction(comb(3 * n, 3 * k)),
        lambda ctx, n: Fraction(2, 3) * (Fraction(2) ** (3 * n - 1) + (-1) ** n),
        description="T(n,k) = C(3n,3k)",
        anchor="sum C(3n,3k) = 2/3 (2^(3n-1) + (-1)^n)",
    ),
    WeightFamily(
        "bernoulli",
        lambda ctx, n, k: comb(n, k) * bernoulli_poly(k) * bernoulli_poly(n - k),
        lambda ctx, n: agoh_dilcher_rhs(n),
        polynomial=True,
        description="T(n,k) = C(n,k) B_k(x) B_{n-k}(x)",
        anchor="sum C(n,k)B_k(x)B_{n-k}(x) = n(2x-1)B_{n-1}(2x) - (n-1)B_n(2x)",
    ),
    WeightFamily(
        "lucas_uu",
        lambda ctx, n, k: ctx.U()[ctx.r * k] * ctx.U()[ctx.r * (n - k)],
        _lucas_uu_sum,
        domain=_lucas_uu_domain,
        needs=(NEEDS_R, NEEDS_LUCAS),
        description="T(n,k) = U_{rk} U_{r(n-k)}, r >= 1",
        anchor="U_r Δ sum U_{rk}U_{r(n-k)} = (n+1)U_r V_{rn} - 2U_{r(n+1)}",
    ),
    WeightFamily(
        "lucas_vv",
        lambda ctx, n, k: ctx.V()[ctx.r * k] * ctx.V()[ctx.r * (n - k)],
        _lucas_vv_sum,
        domain=_lucas_vv_domain,
        needs=(NEEDS_R, NEEDS_LUCAS),
        description="T(n,k) = V_{rk} V_{r(n-k)}, r >= 1",
        anchor="U_r sum V_{rk}V_{r(n-k)} = (n+1)U_r V_{rn} + 2U_{r(n+1)}",
    ),
    WeightFamily(
        "cheb_tt",
        lambda ctx, n, k: chebyshev.t(ctx.r * k) * chebyshev.t(ctx.r * (n - k)),
        _cheb_tt_sum,
        domain=_r_positive,
        needs=(NEEDS_R,),
        polynomial=True,
        description="T(n,k) = t_{rk}(x) t_{r(n-k)}(x), r >= 1",
        anchor="2u_{r-1} sum t_{rk}t_{r(n-k)} = (n+1)u_{r-1}t_{rn} + u_{rn+r-1}",
    ),
    WeightFamily(
        "cheb_uu",
        lambda ctx, n, k: chebyshev.u(ctx.r * k) * chebyshev.u(ctx.r * (n - k)),
        _cheb_uu_sum,
        domain=_r_positive,
        needs=(NEEDS_R,),
        polynomial=True,
        description="T(n,k) = u_{rk}(x) u_{r(n-k)}(x), r >= 1",
        anchor="2(x^2-1)u_{r-1} sum u_{rk}u_{r(n-k)} = (n+1)u_{r-1}t_{rn+2} - u_{rn+r-1}",
    ),
]

WEIGHT_FAMILIES = OrderedDict((family.name, family) for family in _FAMILIES)


def get_family(name: str) -> WeightFamily:
    try:
        return WEIGHT_FAMILIES[name]
    except KeyError:
        raise WeightContextError(
            "unknown weight family %r, expected one of: %s" % (name, ", ".join(WEIGHT_FAMILIES))
        ) from None
