import random
from fractions import Fraction

import pytest
from seqconv.catalog import get_entry
from seqconv.exactmath import QuadExt
from seqconv.exceptions import PreconditionError
from seqconv.identities import CheckResult
from seqconv.identities import IdentityEntry
from seqconv.identities import ScalarDomain
from seqconv.identities import Status
from seqconv.identities import SweepReport
from seqconv.identities import Variant
from seqconv.identities import carlitz_rhs
from seqconv.identities import check_identity
from seqconv.identities import convolve
from seqconv.identities import gamma_general
from seqconv.identities import horadam_conv_rhs
from seqconv.identities import horadam_gamma
from seqconv.identities import sweep
from seqconv.identities import theorem1_check
from seqconv.identities import weighted_convolve
from seqconv.sequences import lucas_u
from seqconv.sequences import lucas_v
from seqconv.sequences import named
from seqconv.weights import WEIGHT_FAMILIES
from seqconv.weights import WeightContext
from seqconv.weights import in_domain

from tests.conftest import perturbed


def _nonzero_rational(rng):
    while True:
        value = Fraction(rng.randint(-12, 12), rng.randint(1, 7))
        if value:
            return value


def test_convolve_small_values():
    F, L = named("F"), named("L")
    assert convolve(F, F, 1, 4) == 0 * 3 + 1 * 2 + 1 * 1 + 2 * 1 + 3 * 0
    assert convolve(L, F, 2, 2) == 2 * F[4] + L[2] * F[2] + L[4] * 0
    with pytest.raises(PreconditionError):
        convolve(F, F, 1, -1)


def test_theorem1_rational_draws():
    rng = random.Random(7)
    for _ in range(500):
        scalars = [_nonzero_rational(rng) for _ in range(8)]
        n = rng.randint(0, 10)
        assert theorem1_check(*scalars, n).passed


def test_theorem1_quadratic_draws():
    rng = random.Random(11)
    for _ in range(50):
        d = rng.choice((2, 3, 5, 7))
        scalars = []
        while len(scalars) < 8:
            value = QuadExt(rng.randint(-4, 4), rng.randint(-4, 4), d)
            if value != 0:
                scalars.append(value)
        assert theorem1_check(*scalars, rng.randint(0, 10)).passed


def test_theorem1_coincident_ratios():
    assert theorem1_check(1, 1, 1, 1, 2, 3, 2, 3, 2).passed


def test_theorem1_golden_ratio_pair():
    alpha = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
    result = theorem1_check(1, 1, 1, 1, alpha, alpha.conjugate(), 1, 1, 3)
    assert result.passed
    assert isinstance(result.lhs, QuadExt)


def test_theorem1_rejects_zero():
    with pytest.raises(PreconditionError):
        theorem1_check(0, 1, 1, 1, 2, 3, 4, 5, 2)


def test_general_horadam_rhs_on_random_pairs(horadam_pairs):
    skipped = 0
    for X, Y in horadam_pairs:
        for r in range(1, 4):
            gamma = horadam_gamma(X, Y, r)
            if gamma == 0:
                skipped += 1
                continue
            for n in range(0, 26):
                assert gamma * convolve(X, Y, r, n) == horadam_conv_rhs(X, Y, r, n), (X.params, Y.params, r, n)
    assert skipped < 3 * len(horadam_pairs)


@pytest.mark.parametrize("name", list(WEIGHT_FAMILIES))
def test_antisymmetric_cancellation(name):
    family = WEIGHT_FAMILIES[name]
    for p, q in ((1, -1), (2, -1), (1, -2)):
        for r in range(1, 4):
            ctx = WeightContext(r=r, p=p, q=q)
            for n in range(0, 9):
                if not in_domain(family, ctx, n):
                    continue
                difference = weighted_convolve(family, ctx, lucas_u(p, q), lucas_v(p, q), r, n) - carlitz_rhs(
                    family, ctx, r, n, Variant.LUCAS
                )
                assert difference == 0


def test_check_identity_pass():
    result = check_identity(get_entry("eq6_lucas_jacobsthal"), 1, 5)
    assert result.status is Status.PASS
    assert result.lhs == result.rhs


def test_check_identity_skips_outside_domain():
    result = check_identity(get_entry("eq6_lucas_jacobsthal"), 2, 5)
    assert result.status is Status.SKIPPED
    assert result.reason


def test_check_identity_gamma_guard():
    entry = get_entry("thm4_lucas_jacobsthal_general")
    X, Y = named("L"), named("J")
    vanishing = [r for r in range(-6, 7) if horadam_gamma(X, Y, r) == 0]
    assert vanishing
    result = check_identity(entry, vanishing[0], 3)
    assert result.status is Status.SKIPPED
    assert result.reason == "γ(r) = 0"


def test_check_identity_perturbed_fails_with_values():
    result = check_identity(perturbed("eq3_lucas_fib"), 1, 4)
    assert result.status is Status.FAIL
    assert result.rhs == result.lhs + 1


def test_check_identity_never_raises():
    def boom(r, n):
        raise ZeroDivisionError("division by zero")

    entry = IdentityEntry("boom", "", "", ScalarDomain.RATIONAL, boom, boom)
    result = check_identity(entry, 1, 1)
    assert result.status is Status.FAIL
    assert result.reason.startswith("evaluation error")


def test_check_identity_scalar_domain_closure():
    entry = IdentityEntry(
        "wrong_domain", "", "", ScalarDomain.POLYNOMIAL, lambda r, n: Fraction(n), lambda r, n: Fraction(n)
    )
    result = check_identity(entry, 1, 2)
    assert result.status is Status.FAIL
    assert "domain" in result.reason


def test_sweep_counts_and_minimal_counterexample():
    entries = [get_entry("eq3_lucas_fib"), perturbed("cor_fib_lucas")]
    report = sweep(entries, range(-2, 3), range(0, 5))
    assert not report.ok
    assert report.tallies["eq3_lucas_fib"].failed == 0
    assert report.tallies["eq3_lucas_fib"].passed == 5
    assert report.tallies["perturbed"].failed == 25
    worst = report.minimal_counterexample("perturbed")
    assert (worst.r, worst.n) == (0, 0)
    assert [res.r for res in report.failures] == [0, 1, -1, 2, -2]


def test_sweep_all_skipped():
    report = sweep([get_entry("eq1_fib_self")], range(2, 4), range(0, 3))
    assert report.ok
    assert report.total.skipped == 6
    assert report.total.passed == report.total.failed == 0


def test_sweep_fail_fast_keeps_failing_cell():
    report = sweep([perturbed("eq3_lucas_fib")], range(1, 2), range(0, 10), fail_fast=True)
    assert report.stopped_early
    assert len(report.cells) == 1
    assert report.cells[-1].failed


def test_sweep_rejects_empty_ranges():
    with pytest.raises(PreconditionError):
        sweep([get_entry("eq3_lucas_fib")], range(0), range(0, 3))


def test_pooled_sweep_matches_sequential(acceptance_ids):
    entries = [get_entry(identity) for identity in acceptance_ids] + [perturbed("self_fib")]
    sequential = sweep(entries, range(1, 3), range(0, 8), workers=1)
    pooled = sweep(entries, range(1, 3), range(0, 8), workers=2)
    assert sequential.cells == pooled.cells
    assert sequential.failures == pooled.failures


def test_report_from_results_orders_failures():
    results = [
        CheckResult("a", 2, 3, Status.FAIL),
        CheckResult("a", 2, 1, Status.FAIL),
        CheckResult("a", -1, 1, Status.FAIL),
        CheckResult("b", 1, 0, Status.PASS),
    ]
    report = SweepReport.from_results(results, ["b", "a"])
    assert list(report.tallies) == ["b", "a"]
    assert [(res.r, res.n) for res in report.failures] == [(-1, 1), (2, 1)]
    assert report.minimal_counterexample("a").r == -1
    assert report.minimal_counterexample("b") is None


@pytest.mark.parametrize(
    "q_x, q_y, companions, expected",
    [
        (-1, -2, ("L", "j"), 1),
        (-1, -1, ("L", "Q"), -1),
        (-1, -1, ("L", "L"), 0),
    ],
)
def test_gamma_general_worked_values(q_x, q_y, companions, expected):
    v_x, v_y = (named(symbol) for symbol in companions)
    assert gamma_general(q_x, q_y, v_x, v_y, 1) == expected


def test_gamma_vanishes_for_a_sequence_with_itself(horadam_pairs):
    for X, _ in horadam_pairs[:40]:
        for r in range(-3, 6):
            assert horadam_gamma(X, X, r) == 0
    F, P = named("F"), named("P")
    assert horadam_gamma(F, F, 1) == 0
    assert horadam_gamma(F, P, 1) == -1


@pytest.mark.parametrize(
    "side, guard",
    [
        (lambda r, n: {}["missing"], None),
        (lambda r, n: None + n, None),
        (lambda r, n: Fraction(n), lambda r, n: [][r]),
    ],
)
def test_malformed_entries_become_failing_cells(side, guard):
    kwargs = {"guard": guard} if guard else {}
    entry = IdentityEntry("malformed", "", "", ScalarDomain.RATIONAL, side, side, **kwargs)
    report = sweep([entry], range(1, 3), range(0, 3))
    assert report.tallies["malformed"].failed == 6
    assert all(res.reason.startswith("evaluation error") for res in report.failures)
