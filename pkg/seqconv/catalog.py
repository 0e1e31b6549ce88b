"""
The built-in catalog of convolution identities.

Theorem-derived entries are instantiations of the general results and must
hold in every in-domain cell. As-printed entries transcribe worked examples
and specialised statements exactly as they were published; the sweep
adjudicates them and reports minimal counterexamples instead of trusting them.

Notation: F L P Q J j B C are the Fibonacci, Lucas, Pell, Pell-Lucas,
Jacobsthal, Jacobsthal-Lucas, balancing and Lucas-balancing numbers; t and u
are the Chebyshev polynomials of the first and second kind.
"""
import logging
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from seqconv.chebyshev import t
from seqconv.chebyshev import u
from seqconv.exactmath import Polynomial
from seqconv.exactmath import geom_ratio_sum
from seqconv.exceptions import UnknownIdentityError
from seqconv.identities import IdentityEntry
from seqconv.identities import Provenance
from seqconv.identities import ScalarDomain
from seqconv.identities import Variant
from seqconv.identities import carlitz_lhs
from seqconv.identities import carlitz_rhs
from seqconv.identities import convolve
from seqconv.identities import horadam_conv_rhs
from seqconv.identities import horadam_gamma
from seqconv.identities import shifted_u
from seqconv.identities import theorem1_sides
from seqconv.sequences import HoradamSeq
from seqconv.sequences import lucas_u
from seqconv.sequences import lucas_v
from seqconv.sequences import make_sequence
from seqconv.sequences import named
from seqconv.weights import WEIGHT_FAMILIES
from seqconv.weights import WeightContext
from seqconv.weights import WeightFamily
from seqconv.weights import agoh_dilcher_rhs
from seqconv.weights import get_family
from seqconv.weights import in_domain
from seqconv.weights import weight_sum_brute

logger = logging.getLogger(__name__)

THEOREM = Provenance.THEOREM
PRINTED = Provenance.PRINTED
RATIONAL = ScalarDomain.RATIONAL
POLYNOMIAL = ScalarDomain.POLYNOMIAL

# (label, p, q) of the Lucas sequence pairs U(p, q), V(p, q) used for instances
LUCAS_PAIRS = [
    ("fibonacci", 1, -1),
    ("pell", 2, -1),
    ("jacobsthal", 1, -2),
    ("balancing", 6, 1),
    ("p3_q2", 3, 2),
    ("p1_q3", 1, 3),
    ("pm2_q5", -2, 5),
]

CARLITZ_PAIRS = LUCAS_PAIRS[:3]

# (label, (p_X, q_X), (p_Y, q_Y)) for the first- and second-kind pair theorems
KIND_PAIRS = [
    ("fib_pell", (1, -1), (2, -1)),
    ("jacobsthal_p1_q3", (1, -2), (1, 3)),
    ("pell_balancing", (2, -1), (6, 1)),
    ("p3_q2_pm2_q5", (3, 2), (-2, 5)),
]

RANDOM_HORADAM_SEEDS = range(6)

X2_MINUS_1 = Polynomial((-1, 0, 1))

F = named("F")
L = named("L")
P = named("P")
Q = named("Q")
J = named("J")
j = named("j")
B = named("B")
C = named("C")


def sign(r: int) -> Fraction:
    return Fraction(-1) ** r


def power(base: int, r: int) -> Fraction:
    return Fraction(base) ** r


def fixed_stride(stride: int):
    """Guard for identities stated at one stride only."""
    reason = "fixed stride; checked at r = %d only" % stride

    def guard(r: int, n: int) -> Optional[str]:
        return None if r == stride else reason

    return guard


def nonzero_guard(value, label: str):
    def guard(r: int, n: int) -> Optional[str]:
        return None if value(r) != 0 else "%s = 0" % label

    return guard


def _entry(id, anchor, quote, lhs, rhs, guard=None, provenance=THEOREM, tags=(), domain=RATIONAL, note=""):
    kwargs = {}
    if guard is not None:
        kwargs["guard"] = guard
    return IdentityEntry(
        id=id,
        anchor=anchor,
        quote=quote,
        scalar_domain=domain,
        lhs=lhs,
        rhs=rhs,
        provenance=provenance,
        tags=tuple(tags),
        note=note,
        **kwargs,
    )


def _classical() -> List[IdentityEntry]:
    tags = ("classical",)
    return [
        _entry(
            "eq1_fib_self",
            "classical Fibonacci self-convolution",
            "\\frac{1}{5}((n+1)L_{n} - 2F_{n+1})",
            lambda r, n: convolve(F, F, r, n),
            lambda r, n: ((n + 1) * L[n] - 2 * F[n + 1]) / 5,
            fixed_stride(1),
            tags=tags,
        ),
        _entry(
            "eq2_lucas_self",
            "classical Lucas self-convolution",
            "(n+1)L_{n} + 2F_{n+1}",
            lambda r, n: convolve(L, L, r, n),
            lambda r, n: (n + 1) * L[n] + 2 * F[n + 1],
            fixed_stride(1),
            tags=tags,
        ),
        _entry(
            "eq3_lucas_fib",
            "classical Lucas-Fibonacci convolution",
            "(n+1)F_{n}",
            lambda r, n: convolve(L, F, r, n),
            lambda r, n: (n + 1) * F[n],
            fixed_stride(1),
            tags=tags,
        ),
        _entry(
            "eq4_jacobsthal_fib",
            "mixed Jacobsthal-Fibonacci convolution",
            "J_{n+1} - F_{n+1}",
            lambda r, n: convolve(J, F, r, n),
            lambda r, n: J[n + 1] - F[n + 1],
            fixed_stride(1),
            tags=tags,
        ),
        _entry(
            "eq5_pell_fib",
            "mixed Pell-Fibonacci convolution",
            "P_{n} - F_{n}",
            lambda r, n: convolve(P, F, r, n),
            lambda r, n: P[n] - F[n],
            fixed_stride(1),
            tags=tags,
        ),
        _entry(
            "eq6_lucas_jacobsthal",
            "mixed Lucas-Jacobsthal convolution",
            "j_{n + 1} - L_{n + 1}",
            lambda r, n: convolve(L, J, r, n),
            lambda r, n: j[n + 1] - L[n + 1],
            fixed_stride(1),
            tags=tags,
        ),
        _entry(
            "eq7_fib_balancing",
            "mixed Fibonacci-balancing convolution at even indices",
            "\\frac{1}{31} ( B_{2n} - 6F_{2n} )",
            lambda r, n: convolve(F, B, r, n),
            lambda r, n: (B[2 * n] - 6 * F[2 * n]) / 31,
            fixed_stride(2),
            tags=tags,
        ),
    ]


def _lucas_instances(label: str, p: int, q: int) -> List[IdentityEntry]:
    U, V = lucas_u(p, q), lucas_v(p, q)
    delta = Fraction(p * p - 4 * q)
    qq = Fraction(q)
    tags = ("closed-form", "lucas")
    return [
        _entry(
            "uv_%s" % label,
            "first kind against second kind, U(%d,%d)" % (p, q),
            "\\sum_{k = 0}^n U_{rk} V_{r(n - k)} = (n + 1) U_{rn}",
            lambda r, n: convolve(U, V, r, n),
            lambda r, n: (n + 1) * U[r * n],
            tags=tags,
        ),
        _entry(
            "self_uu_%s" % label,
            "self-convolution of U(%d,%d)" % (p, q),
            "U_r \\Delta \\sum_{k = 0}^n U_{rk} U_{r(n - k)} = (n + 1)U_r V_{rn} - 2U_{r(n + 1)}",
            lambda r, n: U[r] * delta * convolve(U, U, r, n),
            lambda r, n: (n + 1) * U[r] * V[r * n] - 2 * U[r * (n + 1)],
            tags=tags,
        ),
        _entry(
            "self_vv_%s" % label,
            "self-convolution of V(%d,%d)" % (p, q),
            "U_r \\sum_{k = 0}^n V_{rk} V_{r(n - k)} = (n + 1)U_r V_{rn} + 2U_{r(n + 1)}",
            lambda r, n: U[r] * convolve(V, V, r, n),
            lambda r, n: (n + 1) * U[r] * V[r * n] + 2 * U[r * (n + 1)],
            tags=tags,
        ),
        _entry(
            "sq_uv_%s" % label,
            "squared-index U/V convolution, (%d,%d)" % (p, q),
            "\\sum_{k=0}^n U_{2r(n-k)} V_{2rk} = (n+1)U_{rn} V_{rn}",
            lambda r, n: convolve(V, U, 2 * r, n),
            lambda r, n: (n + 1) * U[r * n] * V[r * n],
            tags=tags,
        ),
        _entry(
            "sq_vv_%s" % label,
            "squared-index V/V convolution, (%d,%d)" % (p, q),
            "(n+1) ( V_{rn}^2 - 2 q^{rn} ) + 2 \\frac{U_{2r(n+1)}}{U_{2r}}",
            lambda r, n: convolve(V, V, 2 * r, n),
            lambda r, n: (n + 1) * (V[r * n] ** 2 - 2 * qq ** (r * n)) + 2 * U[2 * r * (n + 1)] / U[2 * r],
            nonzero_guard(lambda r: U[2 * r], "U_{2r}"),
            tags=tags,
        ),
    ]


def _closed_forms() -> List[IdentityEntry]:
    tags = ("closed-form",)
    entries = [
        _entry(
            "thm2_pell_pell_lucas",
            "Pell against Pell-Lucas",
            "\\sum_{k=0}^n P_{rk} Q_{r(n-k)} = (n+1) P_{rn}",
            lambda r, n: convolve(P, Q, r, n),
            lambda r, n: (n + 1) * P[r * n],
            tags=tags,
        ),
        _entry(
            "thm2_jacobsthal",
            "Jacobsthal against Jacobsthal-Lucas",
            "\\sum_{k=0}^n J_{rk} j_{r(n-k)} = (n+1) J_{rn}",
            lambda r, n: convolve(J, j, r, n),
            lambda r, n: (n + 1) * J[r * n],
            tags=tags,
        ),
        _entry(
            "thm2_balancing",
            "balancing against Lucas-balancing",
            "\\sum_{k=0}^n B_{rk} C_{r(n-k)} = \\frac{(n+1)}{2} B_{rn}",
            lambda r, n: convolve(B, C, r, n),
            lambda r, n: Fraction(n + 1, 2) * B[r * n],
            tags=tags,
        ),
        _entry(
            "cor_fib_lucas",
            "Lucas against Fibonacci at stride r",
            "\\sum_{k = 0}^n L_{rk} F_{r(n - k)} = (n + 1)F_{rn}",
            lambda r, n: convolve(L, F, r, n),
            lambda r, n: (n + 1) * F[r * n],
            tags=tags,
        ),
        _entry(
            "self_fib",
            "Fibonacci self-convolution at stride r",
            "5F_r \\sum_{k = 0}^n F_{rk} F_{r(n - k)} = (n + 1)F_r L_{rn} - 2F_{r(n + 1)}",
            lambda r, n: 5 * F[r] * convolve(F, F, r, n),
            lambda r, n: (n + 1) * F[r] * L[r * n] - 2 * F[r * (n + 1)],
            tags=tags,
        ),
        _entry(
            "self_lucas",
            "Lucas self-convolution at stride r",
            "F_r \\sum_{k = 0}^n L_{rk} L_{r(n - k)} = (n + 1)F_r L_{rn} + 2F_{r(n + 1)}",
            lambda r, n: F[r] * convolve(L, L, r, n),
            lambda r, n: (n + 1) * F[r] * L[r * n] + 2 * F[r * (n + 1)],
            tags=tags,
        ),
    ]
    for label, p, q in LUCAS_PAIRS:
        entries.extend(_lucas_instances(label, p, q))
    return entries


def _chebyshev() -> List[IdentityEntry]:
    tags = ("closed-form", "chebyshev")
    return [
        _entry(
            "cheb_tu_conv",
            "first kind against second kind",
            "2u_{r - 1}(x) \\sum t_{rk}(x) u_{r(n - k)}(x) = (n + 1)u_{r - 1}(x) u_{rn}(x) + u_{rn + r - 1}(x)",
            lambda r, n: 2 * u(r - 1) * convolve(t, u, r, n),
            lambda r, n: (n + 1) * u(r - 1) * u(r * n) + u(r * n + r - 1),
            tags=tags,
            domain=POLYNOMIAL,
        ),
        _entry(
            "cheb_tt_self",
            "self-convolution of the first kind",
            "(n + 1)u_{r - 1}(x) t_{rn}(x) + u_{rn + r - 1}(x)",
            lambda r, n: 2 * u(r - 1) * convolve(t, t, r, n),
            lambda r, n: (n + 1) * u(r - 1) * t(r * n) + u(r * n + r - 1),
            tags=tags,
            domain=POLYNOMIAL,
        ),
        _entry(
            "cheb_uu_self",
            "self-convolution of the second kind",
            "2(x^2 - 1)u_{r - 1}(x) \\sum u_{rk}(x) u_{r(n - k)}(x) = (n + 1)u_{r - 1}(x) t_{rn + 2}(x) - u_{rn + r - 1}(x)",
            lambda r, n: 2 * X2_MINUS_1 * u(r - 1) * convolve(u, u, r, n),
            lambda r, n: (n + 1) * u(r - 1) * t(r * n + 2) - u(r * n + r - 1),
            tags=tags,
            domain=POLYNOMIAL,
        ),
        _entry(
            "cheb_tu_shifted",
            "first kind against shifted second kind (u_{m-1} plays U_m)",
            "\\sum_{k=0}^n t_{rk}(x) u_{r(n-k)-1}(x) = \\frac{n+1}{2} u_{rn-1}(x)",
            lambda r, n: convolve(t, shifted_u, r, n),
            lambda r, n: Fraction(n + 1, 2) * u(r * n - 1),
            tags=tags,
            domain=POLYNOMIAL,
        ),
        _entry(
            "cheb_sq_tu_shifted",
            "squared-index first kind against shifted second kind",
            "\\sum_{k=0}^n t_{2rk}(x) u_{2r(n-k)-1}(x) = (n+1) t_{rn}(x) u_{rn-1}(x)",
            lambda r, n: convolve(t, shifted_u, 2 * r, n),
            lambda r, n: (n + 1) * t(r * n) * u(r * n - 1),
            tags=tags,
            domain=POLYNOMIAL,
        ),
        _entry(
            "cheb_sq_tt",
            "squared-index self-convolution of the first kind, cleared of u_{2r-1}",
            "(n+1) (t_{rn}^2(x) - \\frac{1}{2}) + \\frac{1}{2}\\frac{u_{2r(n+1)-1}(x)}{u_{2r-1}(x)}",
            lambda r, n: u(2 * r - 1) * convolve(t, t, 2 * r, n),
            lambda r, n: u(2 * r - 1) * (n + 1) * (t(r * n) ** 2 - Fraction(1, 2))
            + u(2 * r * (n + 1) - 1) / 2,
            tags=tags,
            domain=POLYNOMIAL,
        ),
    ]


@lru_cache(maxsize=None)
def theorem1_draw(seed: int) -> Tuple[Fraction, ...]:
    """Eight non-zero rationals (A1, A2, B1, B2, x, y, z, w) drawn from ``seed``."""
    rng = random.Random(seed)
    values = []
    while len(values) < 8:
        value = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if value:
            values.append(value)
    return tuple(values)


def theorem2_sides(A1, A2, B1, B2, z, w, n):
    lhs = sum(
        (A1 * z ** k + B1 * w ** k) * (A2 * z ** (n - k) + B2 * w ** (n - k)) for k in range(n + 1)
    )
    rhs = (n + 1) * (A1 * A2 * z ** n + B1 * B2 * w ** n) + (A1 * B2 + A2 * B1) * geom_ratio_sum(z, w, n)
    return lhs, rhs


def _geometric() -> List[IdentityEntry]:
    tags = ("geometric",)
    return [
        _entry(
            "thm1_rational_draw",
            "four geometric sums; r seeds the rational draw",
            "A_1 A_2 \\frac{x^{n + 1} - z^{n + 1}}{x - z} + ...",
            lambda r, n: theorem1_sides(*theorem1_draw(r), n)[0],
            lambda r, n: theorem1_sides(*theorem1_draw(r), n)[1],
            tags=tags,
        ),
        _entry(
            "thm2_coincident",
            "coincident ratios x = z, y = w; r seeds the rational draw",
            "(n + 1)( A_1 A_2 z^n + B_1 B_2 w^n ) + ( A_1 B_2 + A_2 B_1 ) \\frac{z^{n + 1} - w^{n + 1}}{z - w}",
            lambda r, n: theorem2_sides(*theorem1_draw(r)[:4], *theorem1_draw(r)[6:], n)[0],
            lambda r, n: theorem2_sides(*theorem1_draw(r)[:4], *theorem1_draw(r)[6:], n)[1],
            tags=tags,
        ),
    ]


def random_horadam_pair(rng: random.Random, bound: int = 5) -> Tuple[HoradamSeq, HoradamSeq]:
    """Two Horadam sequences with integer a, b, p, q in [-bound, bound], pq != 0, Δ != 0."""

    def draw():
        while True:
            a, b, p, q = (rng.randint(-bound, bound) for _ in range(4))
            if p != 0 and q != 0 and p * p != 4 * q:
                return make_sequence(a, b, p, q)

    return draw(), draw()


def horadam_entry(id, X, Y, anchor, quote, tags, provenance=THEOREM) -> IdentityEntry:
    """γ(r)·sum X_{rk} Y_{r(n-k)} against the four-term right-hand side."""
    return _entry(
        id,
        anchor,
        quote,
        lambda r, n: horadam_gamma(X, Y, r) * convolve(X, Y, r, n),
        lambda r, n: horadam_conv_rhs(X, Y, r, n),
        nonzero_guard(lambda r: horadam_gamma(X, Y, r), "γ(r)"),
        provenance=provenance,
        tags=tags,
    )


GENERAL_QUOTE = "q_X^{2r} + q_Y^{2r} - (q_X^r + q_Y^r ){V_X}_r {V_Y}_r + q_X^r {V_Y}_{2r} + q_Y^r {V_X}_r^2"


def _horadam() -> List[IdentityEntry]:
    tags = ("horadam",)
    entries = [
        horadam_entry(
            "thm4_lucas_jacobsthal_general",
            L,
            J,
            "general Horadam convolution, X = Lucas, Y = Jacobsthal",
            "\\gamma (r) = j_{2r} ( 1 + (- 1)^r ) + (- 1)^r 2^r L_r (L_r - j_r ) - (- 1)^r L_r j_r",
            tags + ("lucas-jacobsthal",),
        ),
        horadam_entry(
            "thm_fib_pell_general",
            F,
            P,
            "general Horadam convolution, X = Fibonacci, Y = Pell",
            GENERAL_QUOTE,
            tags,
        ),
        horadam_entry(
            "thm31_pell_jacobsthal_general",
            P,
            J,
            "first-kind pair, X = Pell, Y = Jacobsthal",
            GENERAL_QUOTE,
            tags + ("first-kind",),
        ),
        horadam_entry(
            "thm32_lucas_jlucas_general",
            L,
            j,
            "second-kind pair, X = Lucas, Y = Jacobsthal-Lucas",
            GENERAL_QUOTE,
            tags + ("second-kind",),
        ),
        horadam_entry(
            "thm3_jacobsthal_fib",
            J,
            F,
            "general Horadam convolution, X = Jacobsthal, Y = Fibonacci",
            GENERAL_QUOTE,
            tags,
        ),
        horadam_entry(
            "thm3_fib_balancing",
            F,
            B,
            "general Horadam convolution, X = Fibonacci, Y = balancing",
            GENERAL_QUOTE,
            tags,
        ),
    ]
    for label, (px, qx), (py, qy) in KIND_PAIRS:
        entries.append(
            horadam_entry(
                "thm31_first_kind_%s" % label,
                lucas_u(px, qx),
                lucas_u(py, qy),
                "first-kind pair U(%d,%d), U(%d,%d)" % (px, qx, py, qy),
                GENERAL_QUOTE,
                tags + ("first-kind",),
            )
        )
        entries.append(
            horadam_entry(
                "thm32_second_kind_%s" % label,
                lucas_v(px, qx),
                lucas_v(py, qy),
                "second-kind pair V(%d,%d), V(%d,%d)" % (px, qx, py, qy),
                GENERAL_QUOTE,
                tags + ("second-kind",),
            )
        )
    for seed in RANDOM_HORADAM_SEEDS:
        X, Y = random_horadam_pair(random.Random(seed))
        entries.append(
            horadam_entry(
                "thm3_random_%d" % seed,
                X,
                Y,
                "general Horadam convolution, X = %s, Y = %s" % (X.params, Y.params),
                GENERAL_QUOTE,
                tags + ("random",),
            )
        )
    return entries


def _lucas_jacobsthal_printed_gamma(r):
    s, two = sign(r), power(2, r)
    return j[2 * r] * (1 + s) + s * two * L[r] * (L[r] - j[r]) - s * L[r] * j[r]


def _lucas_jacobsthal_printed_rhs(r, n):
    s, two = sign(r), power(2, r)
    return (
        s * (L[r] - j[r]) * L[r * n] * J[r]
        - ((s + j[2 * r]) * J[r] - J[3 * r]) * L[r * (n + 1)]
        + s * two * J[r * n] * (s * 2 * two - L[r] * j[r] + L[2 * r])
        - s * J[r * (n + 1)] * ((L[r] - 2) * j[r] + (1 - s) * L[r])
    )


def _fib_pell_printed_gamma(r):
    s = sign(r)
    return 2 - (s + s) * L[r] * Q[r] + s * Q[2 * r] + power(-2, r) * L[r] ** 2


def _fib_pell_printed_rhs(r, n):
    s = sign(r)
    return (
        s * F[r * n] * (L[r] * P[r] - P[2 * r])
        - F[r * (n + 1)] * ((s - L[r] * Q[r] + Q[2 * r]) * P[r] + L[r] * P[2 * r] - P[3 * r])
        + s * P[r * n] * (Q[r] * F[r] - F[2 * r])
        - P[r * (n + 1)] * ((s - Q[r] * L[r] + L[2 * r]) * F[r] + Q[r] * F[2 * r] - F[3 * r])
    )


def _pell_jacobsthal_printed_gamma(r):
    s, s2 = sign(r), power(-2, r)
    return 1 + power(4, r) - (s + s2) * Q[r] * j[r] + s * j[2 * r] + s2 * Q[r] ** 2


def _pell_jacobsthal_printed_rhs(r, n):
    s, s2 = sign(r), power(-2, r)
    return (
        s * P[r * n] * (Q[r] * J[r] - J[2 * r])
        - P[r * (n + 1)] * ((s - Q[r] * j[r] + j[2 * r]) * J[2 * r] + Q[r] * J[2 * r] - J[3 * r])
        + s2 * J[r * n] * (j[r] * P[r] - P[2 * r])
        - J[r * (n + 1)] * ((s2 - j[r] * Q[r] + Q[2 * r]) * P[r] + j[r] * P[2 * r] - P[3 * r])
    )


def _lucas_jlucas_printed_gamma(r):
    s, s2 = sign(r), power(-2, r)
    return 1 + power(4, r) - (s + s2) * L[r] * j[r] + s * j[2 * r] + s2 * L[r] ** 2


def _lucas_jlucas_printed_rhs(r, n):
    s, s2 = sign(r), power(-2, r)
    return (
        s * L[r * n] * (2 * (s - L[r] * j[r] + j[2 * r]) + L[r] * j[r] - j[2 * r])
        - L[r * (n + 1)] * ((s - L[r] * j[r] + j[2 * r]) * j[r] + L[r] * j[2 * r] - j[3 * r])
        # transcribed as printed: no sign between the bracket and j_r L_r
        + s2 * j[r * n] * (2 * (s2 - j[r] * L[r] + L[2 * r]) * j[r] * L[r] - L[2 * r])
        - j[r * (n + 1)] * ((s2 - j[r] * L[r] + L[2 * r]) * L[r] + j[r] * L[2 * r] - L[3 * r])
    )


def _printed_theorem(id, X, Y, gamma, rhs, anchor, quote, note="") -> IdentityEntry:
    return _entry(
        id,
        anchor,
        quote,
        lambda r, n: gamma(r) * convolve(X, Y, r, n),
        rhs,
        nonzero_guard(gamma, "γ(r)"),
        provenance=PRINTED,
        tags=("printed", "horadam"),
        note=note,
    )


def _printed_example(id, X, Y, stride, factor, rhs, anchor, quote, note="") -> IdentityEntry:
    return _entry(
        id,
        anchor,
        quote,
        lambda r, n: factor * convolve(X, Y, r, n),
        rhs,
        fixed_stride(stride),
        provenance=PRINTED,
        tags=("printed", "horadam"),
        note=note,
    )


def _seiffert_lhs(r, n):
    return sum(F[r * (k + 1)] * P[r * (n + 1 - k)] for k in range(n + 1))


def _printed() -> List[IdentityEntry]:
    return [
        _printed_example(
            "thm4_example_r2",
            L,
            J,
            2,
            1,
            lambda r, n: J[2 * n + 2] - F[2 * n + 2],
            "Lucas-Jacobsthal worked example, stride 2",
            "\\sum_{k = 0}^n L_{2k} J_{2n - 2k} = J_{2n + 2} - F_{2n + 2}",
        ),
        _printed_example(
            "thm4_example_r3",
            L,
            J,
            3,
            1,
            lambda r, n: Fraction(1, 62) * (11 * J[3 * n + 3] + 104 * J[3 * n])
            - Fraction(3, 124) * (7 * L[3 * n + 3] - 3 * L[3 * n]),
            "Lucas-Jacobsthal worked example, stride 3",
            "\\frac{1}{{62}}(11 J_{3n + 3} + 104 J_{3n}) - \\frac{3}{{124}}(7L_{3n + 3} - 3L_{3n} )",
        ),
        _printed_theorem(
            "thm4_printed",
            L,
            J,
            _lucas_jacobsthal_printed_gamma,
            _lucas_jacobsthal_printed_rhs,
            "specialised Lucas-Jacobsthal statement as printed",
            "( - 1)^r (L_r - j_r )L_{rn} J_r - ...",
        ),
        _printed_theorem(
            "fib_pell_printed",
            F,
            P,
            _fib_pell_printed_gamma,
            _fib_pell_printed_rhs,
            "specialised Fibonacci-Pell statement as printed",
            "\\gamma(r) = 2 - ((-1)^r + (-1)^r)L_r Q_r + (-1)^r Q_{2r} + (-2)^r L_r^2",
            note="the general normalizer gives (-1)^r L_r^2 where this prints (-2)^r L_r^2",
        ),
        _printed_example(
            "fib_pell_example_r1",
            F,
            P,
            1,
            1,
            lambda r, n: P[n] - F[n],
            "Fibonacci-Pell worked example, stride 1",
            "\\sum_{k=0}^n F_k P_{n-k} &= P_n - F_n",
        ),
        _printed_example(
            "fib_pell_example_r2",
            F,
            P,
            2,
            12,
            lambda r, n: P[2 * n] - 2 * F[2 * n],
            "Fibonacci-Pell worked example, stride 2",
            "12\\sum_{k=0}^n F_{2k} P_{2n-2k} &= P_{2n} - 2F_{2n}",
        ),
        _printed_example(
            "fib_pell_example_r3",
            F,
            P,
            3,
            106,
            lambda r, n: 10 * P[3 * n] - 25 * F[3 * n],
            "Fibonacci-Pell worked example, stride 3",
            "106\\sum_{k=0}^n F_{3k} P_{3n-3k} &= 10P_{3n} - 25F_{3n}",
        ),
        _entry(
            "seiffert_remark",
            "Seiffert's shifted Fibonacci-Pell convolution as quoted",
            "\\sum_{k=0}^n F_{r(k+1)} P_{r(n+1-k)} = \\frac{F_{r}P_{r(n+2)} - P_{r}F_{r(n+2)}}{2Q_r - L_r}",
            _seiffert_lhs,
            lambda r, n: (F[r] * P[r * (n + 2)] - P[r] * F[r * (n + 2)]) / (2 * Q[r] - L[r]),
            nonzero_guard(lambda r: 2 * Q[r] - L[r], "2Q_r - L_r"),
            provenance=PRINTED,
            tags=("printed", "horadam"),
            note="the original source may use a different summation range",
        ),
        _printed_theorem(
            "pell_jacobsthal_printed",
            P,
            J,
            _pell_jacobsthal_printed_gamma,
            _pell_jacobsthal_printed_rhs,
            "specialised Pell-Jacobsthal statement as printed",
            "- P_{r(n+1)}(((-1)^r - Q_r j_r + j_{2r})J_{2r} + Q_r J_{2r} - J_{3r})",
            note="the general form has J_r where the second bracket prints J_{2r}",
        ),
        _printed_example(
            "pell_jacobsthal_example_r1",
            P,
            J,
            1,
            2,
            lambda r, n: 2 * J[n] - J[n + 1] - P[n] - P[n + 1],
            "Pell-Jacobsthal worked example, stride 1",
            "2\\sum_{k=0}^n P_k J_{n-k} &= 2J_n - J_{n+1} - P_n - P_{n+1}",
        ),
        _printed_example(
            "pell_jacobsthal_example_r2",
            P,
            J,
            2,
            28,
            lambda r, n: P[2 * n] + 51 * P[2 * n + 2] - 6 * J[2 * n + 2] - 8 * J[2 * n],
            "Pell-Jacobsthal worked example, stride 2",
            "28\\sum_{k=0}^n P_{2k} J_{2n-2k} &= P_{2n} + 51P_{2n+2} - 6J_{2n+2} - 8J_{2n}",
        ),
        _printed_example(
            "pell_jacobsthal_example_r3",
            P,
            J,
            3,
            686,
            lambda r, n: 21 * P[3 * n] - 591 * P[3 * n + 3] - 35 * J[3 * n + 3] - 280 * J[3 * n],
            "Pell-Jacobsthal worked example, stride 3",
            "686\\sum_{k=0}^n P_{3k} J_{3n-3k} &= 21P_{3n} - 591P_{3n+3} - 35J_{3n+3} - 280J_{3n}",
        ),
        _printed_theorem(
            "lucas_jlucas_printed",
            L,
            j,
            _lucas_jlucas_printed_gamma,
            _lucas_jlucas_printed_rhs,
            "specialised Lucas-Jacobsthal-Lucas statement as printed",
            "(-2)^r j_{rn}(2((-2)^r-j_rL_r+L_{2r})j_r L_r - L_{2r})",
        ),
        _printed_example(
            "lucas_jlucas_example_r1",
            L,
            j,
            1,
            1,
            lambda r, n: 4 * j[n] + j[n + 1] - 2 * L[n] - L[n + 1],
            "Lucas-Jacobsthal-Lucas worked example, stride 1",
            "\\sum_{k=0}^n L_k j_{n-k} &= 4j_n +j_{n+1} - 2L_n - L_{n+1}",
        ),
        _printed_example(
            "lucas_jlucas_example_r2",
            L,
            j,
            2,
            5,
            lambda r, n: 5 * j[2 * n + 2] + L[2 * n + 2] - 4 * L[2 * n],
            "Lucas-Jacobsthal-Lucas worked example, stride 2",
            "5\\sum_{k=0}^n L_{2k} j_{2n-2k} &=5j_{2n+2}+L_{2n+2}-4L_{2n}",
        ),
        _printed_example(
            "lucas_jlucas_example_r3",
            L,
            j,
            3,
            140,
            lambda r, n: 35 * L[3 * n] + L[3 * n + 3] + 42 * j[3 * n + 3] - 176 * j[3 * n],
            "Lucas-Jacobsthal-Lucas worked example, stride 3",
            "140\\sum_{k=0}^n L_{3k} j_{3n-3k} &= 35L_{3n} + L_{3n+3} +42j_{3n+3} - 176j_{3n}",
        ),
        _entry(
            "cheb_tu_printed",
            "first kind against second kind via the A = B corollary, as printed",
            "\\sum_{k=0}^n t_{rk}(x)u_{r(n-k)}(x) = \\frac{x(n+1)}{\\lambda + \\gamma}u_{rn}(x)",
            lambda r, n: convolve(t, u, r, n),
            # x / (λ + γ) = 1/2
            lambda r, n: Fraction(n + 1, 2) * u(r * n),
            provenance=PRINTED,
            tags=("printed", "chebyshev"),
            domain=POLYNOMIAL,
            note="mixes u_n = (λ^n - γ^n)/(λ - γ) with the standard u_n; compare cheb_tu_shifted",
        ),
        _entry(
            "cheb_sq_tu_printed",
            "squared-index first kind against second kind, as printed",
            "\\sum_{k=0}^n t_{2rk}(x) u_{2r(n-k)}(x) = (n+1) t_{rn}(x) u_{rn}(x)",
            lambda r, n: convolve(t, u, 2 * r, n),
            lambda r, n: (n + 1) * t(r * n) * u(r * n),
            provenance=PRINTED,
            tags=("printed", "chebyshev"),
            domain=POLYNOMIAL,
            note="holds with u_{m-1} in place of u_m; compare cheb_sq_tu_shifted",
        ),
    ]


def carlitz_entry(family: WeightFamily, label: str, p, q, variant: Variant) -> IdentityEntry:
    """Symmetric-weight convolution for one weight family and one Lucas pair or the Chebyshev variant."""

    def context(r: int) -> WeightContext:
        return WeightContext(r=r, p=p, q=q)

    def guard(r: int, n: int) -> Optional[str]:
        if in_domain(family, context(r), n):
            return None
        return "outside the domain of weight %s" % family.name

    if variant is Variant.LUCAS:
        id = "carlitz_%s_%s" % (family.name, label)
        quote = "\\sum_{k=0}^n T(n,k) U_{rk} V_{r(n-k)} = U_{rn} \\sum_{k=0}^n T(n,k)"
        domain = POLYNOMIAL if family.polynomial else RATIONAL
    else:
        id = "carlitz_%s_cheb" % family.name
        quote = "\\sum_{k=0}^n T(n,k) u_{rk-1}(x) t_{r(n-k)}(x) = \\frac{u_{rn-1}(x)}{2} \\sum_{k=0}^n T(n,k)"
        domain = POLYNOMIAL
    return _entry(
        id,
        "symmetric weight %s (%s), %s variant" % (family.name, family.description, variant.value),
        quote,
        lambda r, n: carlitz_lhs(family, context(r), r, n, variant),
        lambda r, n: carlitz_rhs(family, context(r), r, n, variant),
        guard,
        tags=("carlitz", variant.value),
        domain=domain,
    )


def _carlitz() -> List[IdentityEntry]:
    entries = []
    for family in WEIGHT_FAMILIES.values():
        for label, p, q in CARLITZ_PAIRS:
            entries.append(carlitz_entry(family, label, p, q, Variant.LUCAS))
        entries.append(carlitz_entry(family, "cheb", 1, -1, Variant.CHEBYSHEV))
    bernoulli = get_family("bernoulli")
    entries.append(
        _entry(
            "agoh_dilcher",
            "Bernoulli polynomial self-convolution",
            "n(2x-1)B_{n-1}(2x) - (n-1)B_n(2x)",
            lambda r, n: weight_sum_brute(bernoulli, WeightContext(), n),
            lambda r, n: agoh_dilcher_rhs(n),
            fixed_stride(1),
            tags=("carlitz", "bernoulli"),
            domain=POLYNOMIAL,
        )
    )
    return entries


@lru_cache(maxsize=None)
def build_catalog() -> Tuple[IdentityEntry, ...]:
    entries = _classical() + _closed_forms() + _chebyshev() + _geometric() + _horadam() + _carlitz() + _printed()
    seen = set()
    for entry in entries:
        if entry.id in seen:
            raise ValueError("duplicate identity id %s" % entry.id)
        seen.add(entry.id)
    logger.debug("Catalog built with %d identities", len(entries))
    return tuple(entries)


def get_entry(identity: str) -> IdentityEntry:
    for entry in build_catalog():
        if entry.id == identity:
            return entry
    raise UnknownIdentityError(identity)


def all_tags() -> List[str]:
    tags = set()
    for entry in build_catalog():
        tags.update(entry.tags)
    return sorted(tags)


def _provenance_matches(entry: IdentityEntry, provenance: Optional[str]) -> bool:
    if provenance in (None, "any"):
        return True
    if provenance == "theorem":
        return entry.provenance is THEOREM
    if provenance == "printed":
        return entry.provenance is PRINTED
    raise ValueError("unknown provenance filter %r" % provenance)


def select(
    ids: Iterable[str] = (), tags: Iterable[str] = (), everything: bool = False, provenance: Optional[str] = None
) -> List[IdentityEntry]:
    """
    Pick catalog entries, keeping catalog order.

    Explicit ids are always included; ``everything`` and tag matches are
    filtered by ``provenance`` (``"theorem"``, ``"printed"`` or ``"any"``).

    :raises UnknownIdentityError: for an unknown id or a tag matching nothing
    """
    catalog = build_catalog()
    wanted = set()
    known = {entry.id for entry in catalog}
    for identity in ids:
        if identity not in known:
            raise UnknownIdentityError(identity)
        wanted.add(identity)
    for tag in tags:
        matched = {e.id for e in catalog if tag in e.tags and _provenance_matches(e, provenance)}
        if not matched:
            raise UnknownIdentityError("tag:%s" % tag)
        wanted |= matched
    if everything:
        wanted |= {e.id for e in catalog if _provenance_matches(e, provenance)}
    return [entry for entry in catalog if entry.id in wanted]


def entries_by_ids(ids: Sequence[str]) -> List[IdentityEntry]:
    return [get_entry(identity) for identity in ids]
