"""
Verification engine for convolution identities.

Every identity is checked pointwise: the left-hand side is always a
brute-force convolution sum (possibly premultiplied by a stated normalizer),
the right-hand side a closed form, and the verdict is exact equality.
"""
import enum
import logging
import multiprocessing
from collections import OrderedDict
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Callable
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from seqconv import chebyshev
from seqconv.exactmath import POLYNOMIAL
from seqconv.exactmath import RATIONAL
from seqconv.exactmath import ExactScalar
from seqconv.exactmath import as_scalar
from seqconv.exactmath import geom_ratio_sum
from seqconv.exactmath import variant_of
from seqconv.exceptions import PreconditionError
from seqconv.exceptions import SeqConvError
from seqconv.exceptions import WeightContextError
from seqconv.sequences import HoradamSeq
from seqconv.weights import WeightContext
from seqconv.weights import WeightFamily
from seqconv.weights import weight_sum_brute
from seqconv.weights import weight_sum_closed
from seqconv.weights import weight_value

logger = logging.getLogger(__name__)

Accessor = Callable[[int], ExactScalar]
Guard = Callable[[int, int], Optional[str]]


class Provenance(enum.Enum):
    THEOREM = "theorem-derived"
    PRINTED = "as-printed-example"


class ScalarDomain(enum.Enum):
    RATIONAL = RATIONAL
    POLYNOMIAL = POLYNOMIAL


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class Variant(enum.Enum):
    LUCAS = "lucas"
    CHEBYSHEV = "chebyshev"


def _always(r: int, n: int) -> Optional[str]:
    return None


@dataclass(frozen=True)
class IdentityEntry:
    """
    One catalogued convolution identity.

    ``guard(r, n)`` returns None when the cell is in the domain, otherwise
    the reason the cell is skipped.
    """

    id: str
    anchor: str
    quote: str
    scalar_domain: ScalarDomain
    lhs: Callable[[int, int], ExactScalar]
    rhs: Callable[[int, int], ExactScalar]
    guard: Guard = _always
    provenance: Provenance = Provenance.THEOREM
    tags: Tuple[str, ...] = ()
    note: str = ""

    def domain(self, r: int, n: int) -> bool:
        return n >= 0 and self.guard(r, n) is None


@dataclass(frozen=True)
class CheckResult:
    identity: str
    r: int
    n: int
    status: Status
    lhs: Optional[ExactScalar] = None
    rhs: Optional[ExactScalar] = None
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL


def counterexample_key(result: CheckResult) -> Tuple[int, int, bool]:
    """Smallest n, then smallest |r|, then positive r before negative r."""
    return (result.n, abs(result.r), result.r < 0)


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0

    def add(self, status: Status):
        if status is Status.PASS:
            self.passed += 1
        elif status is Status.FAIL:
            self.failed += 1
        else:
            self.skipped += 1


@dataclass
class SweepReport:
    cells: List[CheckResult] = field(default_factory=list)
    tallies: Dict[str, Tally] = field(default_factory=OrderedDict)
    # minimal failing n for every failing (identity, r)
    failures: List[CheckResult] = field(default_factory=list)
    stopped_early: bool = False

    @classmethod
    def from_results(cls, results: Iterable[CheckResult], order: Sequence[str] = (), stopped_early=False):
        report = cls(stopped_early=stopped_early)
        for identity in order:
            report.tallies[identity] = Tally()
        minimal: Dict[Tuple[str, int], CheckResult] = {}
        for result in results:
            report.cells.append(result)
            report.tallies.setdefault(result.identity, Tally()).add(result.status)
            if result.failed:
                key = (result.identity, result.r)
                best = minimal.get(key)
                if best is None or result.n < best.n:
                    minimal[key] = result
        position = {identity: i for i, identity in enumerate(report.tallies)}
        report.failures = sorted(
            minimal.values(),
            key=lambda res: (position[res.identity],) + counterexample_key(res),
        )
        return report

    @property
    def ok(self) -> bool:
        return not any(tally.failed for tally in self.tallies.values())

    @property
    def total(self) -> Tally:
        total = Tally()
        for tally in self.tallies.values():
            total.passed += tally.passed
            total.failed += tally.failed
            total.skipped += tally.skipped
        return total

    def minimal_counterexample(self, identity: str) -> Optional[CheckResult]:
        candidates = [res for res in self.failures if res.identity == identity]
        if not candidates:
            return None
        return min(candidates, key=counterexample_key)


def convolve(f: Accessor, g: Accessor, r: int, n: int) -> ExactScalar:
    """sum_{k=0}^{n} f(rk)·g(r(n-k)) by direct summation."""
    if n < 0:
        raise PreconditionError("n must be >= 0, got %d" % n)
    total = f(0) * g(r * n)
    for k in range(1, n + 1):
        total = total + f(r * k) * g(r * (n - k))
    return total


def weighted_convolve(
    w: WeightFamily, ctx: WeightContext, f: Accessor, g: Accessor, r: int, n: int
) -> ExactScalar:
    """sum_{k=0}^{n} T(n,k)·f(rk)·g(r(n-k)) by direct summation."""
    if n < 0:
        raise PreconditionError("n must be >= 0, got %d" % n)
    total = weight_value(w, ctx, n, 0) * f(0) * g(r * n)
    for k in range(1, n + 1):
        total = total + weight_value(w, ctx, n, k) * f(r * k) * g(r * (n - k))
    return total


def gamma_general(q_x, q_y, v_x: Accessor, v_y: Accessor, r: int) -> Fraction:
    """
    Normalizer of the general Horadam convolution:

        q_X^{2r} + q_Y^{2r} - (q_X^r + q_Y^r)·V_{X,r}·V_{Y,r}
            + q_X^r·V_{Y,2r} + q_Y^r·V_{X,r}^2

    It vanishes exactly when a characteristic root of one sequence, raised to
    the r-th power, meets one of the other.
    """
    qx, qy = as_scalar(q_x) ** r, as_scalar(q_y) ** r
    vx, vy = v_x(r), v_y(r)
    return qx * qx + qy * qy - (qx + qy) * vx * vy + qx * v_y(2 * r) + qy * vx * vx


def horadam_gamma(X: HoradamSeq, Y: HoradamSeq, r: int) -> Fraction:
    return gamma_general(X.params.q, Y.params.q, X.companion(), Y.companion(), r)


def horadam_conv_rhs(X: HoradamSeq, Y: HoradamSeq, r: int, n: int) -> Fraction:
    """
    Four-term right-hand side that equals γ(r)·sum X_{rk}Y_{r(n-k)}.

    Holds for every r, including the cells where γ(r) = 0.
    """
    VX, VY = X.companion(), Y.companion()
    qx, qy = X.params.q ** r, Y.params.q ** r
    vx, vy = VX[r], VY[r]
    cx = qx - vx * vy + VY[2 * r]
    cy = qy - vy * vx + VX[2 * r]
    return (
        qx * X[r * n] * (cx * Y[0] + vx * Y[r] - Y[2 * r])
        - X[r * (n + 1)] * (cx * Y[r] + vx * Y[2 * r] - Y[3 * r])
        + qy * Y[r * n] * (cy * X[0] + vy * X[r] - X[2 * r])
        - Y[r * (n + 1)] * (cy * X[r] + vy * X[2 * r] - X[3 * r])
    )


def shifted_u(m: int):
    """u_{m-1}(x): the Chebyshev analogue of U_m."""
    return chebyshev.u(m - 1)


def carlitz_rhs(w: WeightFamily, ctx: WeightContext, r: int, n: int, variant=Variant.LUCAS) -> ExactScalar:
    """
    Right-hand side of the symmetric-weight convolution theorem:

        lucas:      U_{rn} · sum_k T(n,k)
        chebyshev:  u_{rn-1}(x)/2 · sum_k T(n,k)

    The row sum uses the family's closed form when it has one.
    """
    variant = Variant(variant)
    if w.closed_sum is not None:
        row = weight_sum_closed(w, ctx, n)
    else:
        row = weight_sum_brute(w, ctx, n)
    if variant is Variant.LUCAS:
        if not ctx.has_lucas:
            raise WeightContextError("the Lucas variant needs (p, q) in the weight context")
        return ctx.U()[r * n] * row
    return chebyshev.u(r * n - 1) * row / 2


def carlitz_lhs(w: WeightFamily, ctx: WeightContext, r: int, n: int, variant=Variant.LUCAS) -> ExactScalar:
    variant = Variant(variant)
    if variant is Variant.LUCAS:
        return weighted_convolve(w, ctx, ctx.U(), ctx.V(), r, n)
    return weighted_convolve(w, ctx, shifted_u, chebyshev.t, r, n)


THEOREM1 = "theorem1_geometric"


def theorem1_sides(A1, A2, B1, B2, x, y, z, w, n: int) -> Tuple[ExactScalar, ExactScalar]:
    scalars = [as_scalar(s) for s in (A1, A2, B1, B2, x, y, z, w)]
    if n < 0:
        raise PreconditionError("n must be >= 0, got %d" % n)
    if any(s == 0 for s in scalars):
        raise PreconditionError("the geometric-sum convolution needs eight non-zero scalars")
    A1, A2, B1, B2, x, y, z, w = scalars
    lhs = (A1 + B1) * (A2 * z ** n + B2 * w ** n)
    for k in range(1, n + 1):
        lhs = lhs + (A1 * x ** k + B1 * y ** k) * (A2 * z ** (n - k) + B2 * w ** (n - k))
    rhs = (
        A1 * A2 * geom_ratio_sum(x, z, n)
        + A1 * B2 * geom_ratio_sum(x, w, n)
        + A2 * B1 * geom_ratio_sum(y, z, n)
        + B1 * B2 * geom_ratio_sum(y, w, n)
    )
    return lhs, rhs


def theorem1_check(A1, A2, B1, B2, x, y, z, w, n: int, r: int = 1) -> CheckResult:
    """
    Four-geometric-sum identity for eight non-zero scalars.

    Coincident pairs (x = z, ...) go through the (n+1)·x^n limit branch of
    :func:`geom_ratio_sum`.

    :raises PreconditionError: if a scalar is zero or n < 0
    """
    lhs, rhs = theorem1_sides(A1, A2, B1, B2, x, y, z, w, n)
    status = Status.PASS if lhs == rhs else Status.FAIL
    return CheckResult(THEOREM1, r, n, status, lhs, rhs)


def _closed_under(value, domain: ScalarDomain) -> bool:
    try:
        return variant_of(value) == domain.value
    except SeqConvError:
        return False


def check_identity(entry: IdentityEntry, r: int, n: int) -> CheckResult:
    """
    Evaluate one (r, n) cell. Never raises: any exception from the guard or
    either side becomes a failing cell whose reason starts with
    ``evaluation error``.
    """
    try:
        reason = "n < 0" if n < 0 else entry.guard(r, n)
        if reason is not None:
            return CheckResult(entry.id, r, n, Status.SKIPPED, reason=reason)
        lhs = entry.lhs(r, n)
        rhs = entry.rhs(r, n)
    except Exception as e:
        logger.debug("%s at r=%d n=%d raised %r", entry.id, r, n, e)
        return CheckResult(entry.id, r, n, Status.FAIL, reason="evaluation error: %s: %s" % (type(e).__name__, e))
    if isinstance(lhs, int):
        lhs = Fraction(lhs)
    if isinstance(rhs, int):
        rhs = Fraction(rhs)
    if not (_closed_under(lhs, entry.scalar_domain) and _closed_under(rhs, entry.scalar_domain)):
        return CheckResult(
            entry.id, r, n, Status.FAIL, lhs, rhs, reason="value outside the %s domain" % entry.scalar_domain.value
        )
    status = Status.PASS if lhs == rhs else Status.FAIL
    return CheckResult(entry.id, r, n, status, lhs, rhs)


def sweep_cells(entries: Sequence[IdentityEntry], r_values: Iterable[int], n_values: Iterable[int]):
    r_values, n_values = list(r_values), list(n_values)
    return [(i, r, n) for i in range(len(entries)) for r in r_values for n in n_values]


# Entries hold closures, which do not pickle; forked workers inherit this list.
_WORKER_ENTRIES: Sequence[IdentityEntry] = ()


def _check_cell(cell: Tuple[int, int, int]) -> CheckResult:
    index, r, n = cell
    return check_identity(_WORKER_ENTRIES[index], r, n)


def _fork_context():
    try:
        return multiprocessing.get_context("fork")
    except ValueError:
        return None


def sweep(
    entries: Sequence[IdentityEntry],
    r_range: Iterable[int],
    n_range: Iterable[int],
    workers: int = 1,
    fail_fast: bool = False,
    progress: Callable[[CheckResult], None] = None,
) -> SweepReport:
    """
    Check every (entry, r, n) cell and reduce the results into a report.

    Cells are produced in catalog order, then r, then n, and results are
    consumed in that same order whatever the worker count, so the report is
    identical for sequential and pooled runs.
    """
    global _WORKER_ENTRIES
    r_values, n_values = list(r_range), list(n_range)
    if not r_values or not n_values:
        raise PreconditionError("sweep ranges must be non-empty")
    entries = list(entries)
    cells = sweep_cells(entries, r_values, n_values)
    logger.info(
        "Sweeping %d identities over r in [%d, %d], n in [%d, %d]: %d cells",
        len(entries), min(r_values), max(r_values), min(n_values), max(n_values), len(cells),
    )
    context = _fork_context() if workers > 1 else None
    if workers > 1 and context is None:
        logger.warning("fork start method unavailable, sweeping sequentially")

    results: List[CheckResult] = []
    stopped = False

    def consume(stream):
        nonlocal stopped
        for result in stream:
            results.append(result)
            if progress is not None:
                progress(result)
            if fail_fast and result.failed:
                stopped = True
                return

    if context is None:
        consume(check_identity(entries[i], r, n) for i, r, n in cells)
    else:
        _WORKER_ENTRIES = entries
        chunksize = max(1, len(cells) // (workers * 8))
        logger.debug("Starting %d workers, chunksize %d", workers, chunksize)
        try:
            with context.Pool(processes=workers) as pool:
                consume(pool.imap(_check_cell, cells, chunksize=chunksize))
        finally:
            _WORKER_ENTRIES = ()

    report = SweepReport.from_results(results, [entry.id for entry in entries], stopped_early=stopped)
    total = report.total
    logger.info("Sweep finished: %d pass, %d fail, %d skipped", total.passed, total.failed, total.skipped)
    return report
