"""
Horadam sequences w_n(a, b; p, q) over all integer indices.

    w_0 = a, w_1 = b, w_n = p·w_{n-1} - q·w_{n-2}
    w_{-n} = (p·w_{-n+1} - w_{-n+2}) / q

Values are Fractions: with |q| != 1 negative indices are genuine fractions
(J_{-1} = 1/2).

Careful with the letters: in a Horadam quadruple (a, b; p, q) the symbols a
and b are the seeds w_0 and w_1. Elsewhere a and b also name the Pell roots
1 ± √2; those never appear here because all roots are built from p and q.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable
from typing import Dict
from typing import Tuple

from seqconv.exactmath import QuadExt
from seqconv.exactmath import rational_sqrt
from seqconv.exactmath import to_rational
from seqconv.exceptions import DegenerateDiscriminantError
from seqconv.exceptions import ParameterError
from seqconv.exceptions import UnknownSequenceError

logger = logging.getLogger(__name__)

Accessor = Callable[[int], Fraction]


@dataclass(frozen=True)
class HoradamParams:
    a: Fraction
    b: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("a", "b", "p", "q"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.p == 0 or self.q == 0:
            raise ParameterError("p and q must be non-zero, got p = %s, q = %s" % (self.p, self.q))

    @property
    def discriminant(self) -> Fraction:
        return self.p * self.p - 4 * self.q

    def __str__(self):
        return "w(%s,%s;%s,%s)" % (self.a, self.b, self.p, self.q)


class HoradamSeq:
    """
    Memoizing evaluator of one Horadam sequence.

    The cache only ever grows outwards from the seed pair (w_0, w_1), so each
    index is computed once. Instances are not shared between worker processes;
    each worker fills its own copy.
    """

    def __init__(self, params: HoradamParams, name: str = None):
        self.params = params
        self.name = name or str(params)
        self._cache: Dict[int, Fraction] = {0: params.a, 1: params.b}
        self._low = 0
        self._high = 1

    def __repr__(self):
        return "<{} {} [{}..{}]>".format(self.__class__.__name__, self.name, self._low, self._high)

    def __getitem__(self, n: int) -> Fraction:
        return self.at(n)

    def __call__(self, n: int) -> Fraction:
        return self.at(n)

    def at(self, n: int) -> Fraction:
        cache = self._cache
        if n in cache:
            return cache[n]
        p, q = self.params.p, self.params.q
        if n > self._high:
            prev, cur = cache[self._high - 1], cache[self._high]
            for m in range(self._high + 1, n + 1):
                prev, cur = cur, p * cur - q * prev
                cache[m] = cur
            logger.debug("%s: forward cache extended to %d", self.name, n)
            self._high = n
        else:
            nxt, cur = cache[self._low + 1], cache[self._low]
            for m in range(self._low - 1, n - 1, -1):
                nxt, cur = cur, (p * cur - nxt) / q
                cache[m] = cur
            logger.debug("%s: backward cache extended to %d", self.name, n)
            self._low = n
        return cache[n]

    def companion(self) -> "HoradamSeq":
        """The Lucas sequence of the second kind sharing this recurrence."""
        return lucas_v(self.params.p, self.params.q)

    def clear(self):
        params = self.params
        self._cache = {0: params.a, 1: params.b}
        self._low, self._high = 0, 1


NAMED_PARAMS: Dict[str, Tuple[int, int, int, int]] = {
    "fibonacci": (0, 1, 1, -1),
    "lucas": (2, 1, 1, -1),
    "pell": (0, 1, 2, -1),
    "pell_lucas": (2, 2, 2, -1),
    "jacobsthal": (0, 1, 1, -2),
    "jacobsthal_lucas": (2, 1, 1, -2),
    "balancing": (0, 1, 6, 1),
    "lucas_balancing": (1, 3, 6, 1),
}

SYMBOLS = {
    "F": "fibonacci",
    "L": "lucas",
    "P": "pell",
    "Q": "pell_lucas",
    "J": "jacobsthal",
    "j": "jacobsthal_lucas",
    "B": "balancing",
    "C": "lucas_balancing",
}


def named_params(name: str) -> HoradamParams:
    name = SYMBOLS.get(name, name)
    try:
        a, b, p, q = NAMED_PARAMS[name]
    except KeyError:
        raise UnknownSequenceError(name, NAMED_PARAMS) from None
    return HoradamParams(a, b, p, q)


def make_named(name: str) -> HoradamSeq:
    """A fresh sequence for one of the eight named families (or its one-letter symbol)."""
    canonical = SYMBOLS.get(name, name)
    return HoradamSeq(named_params(canonical), canonical)


def named(name: str) -> HoradamSeq:
    """Shared, process-wide instance of a named sequence."""
    return _shared_named(SYMBOLS.get(name, name))


@lru_cache(maxsize=None)
def _shared_named(name: str) -> HoradamSeq:
    return make_named(name)


def make_sequence(a, b, p, q, name: str = None) -> HoradamSeq:
    return HoradamSeq(HoradamParams(a, b, p, q), name)


@lru_cache(maxsize=None)
def lucas_u(p, q) -> HoradamSeq:
    p, q = to_rational(p), to_rational(q)
    return HoradamSeq(HoradamParams(0, 1, p, q), "U(%s,%s)" % (p, q))


@lru_cache(maxsize=None)
def lucas_v(p, q) -> HoradamSeq:
    p, q = to_rational(p), to_rational(q)
    return HoradamSeq(HoradamParams(2, p, p, q), "V(%s,%s)" % (p, q))


def horadam_at(seq: HoradamSeq, n: int) -> Fraction:
    return seq.at(n)


def lucas_u_at(p, q, n: int) -> Fraction:
    return lucas_u(to_rational(p), to_rational(q)).at(n)


def lucas_v_at(p, q, n: int) -> Fraction:
    return lucas_v(to_rational(p), to_rational(q)).at(n)


def binet_at(params: HoradamParams, n: int) -> Fraction:
    """
    Evaluate w_n from the characteristic roots instead of the recurrence.

        w_n = ((b - aβ)·α^n + (aα - b)·β^n) / (α - β)

    α, β = (p ± √Δ)/2 live in Q(√Δ); when Δ is a rational square they are
    plain rationals and the quadratic field is bypassed.

    :raises DegenerateDiscriminantError: if Δ = p² - 4q = 0
    """
    p, q, a, b = params.p, params.q, params.a, params.b
    delta = params.discriminant
    if delta == 0:
        raise DegenerateDiscriminantError(p, q)
    root = rational_sqrt(delta)
    if root is not None:
        alpha, beta = (p + root) / 2, (p - root) / 2
    else:
        alpha = QuadExt(p / 2, Fraction(1, 2), delta)
        beta = alpha.conjugate()
    value = ((b - a * beta) * alpha ** n + (a * alpha - b) * beta ** n) / (alpha - beta)
    if isinstance(value, QuadExt):
        if value.b != 0:
            raise ArithmeticError("irrational part %s left in %s" % (value.b, params))
        return value.a
    return value
