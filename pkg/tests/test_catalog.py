import pytest
from seqconv.catalog import LUCAS_PAIRS
from seqconv.catalog import build_catalog
from seqconv.catalog import get_entry
from seqconv.catalog import select
from seqconv.exceptions import UnknownIdentityError
from seqconv.identities import Provenance
from seqconv.identities import ScalarDomain
from seqconv.identities import Status
from seqconv.identities import sweep
from seqconv.weights import WEIGHT_FAMILIES


def _theorem(entries):
    return [entry for entry in entries if entry.provenance is Provenance.THEOREM]


def assert_no_failures(report):
    assert report.ok, [(res.identity, res.r, res.n) for res in report.failures]


def test_ids_are_unique_and_stable():
    ids = [entry.id for entry in build_catalog()]
    assert len(ids) == len(set(ids))
    for identity in ("eq1_fib_self", "eq7_fib_balancing", "thm4_lucas_jacobsthal_general", "agoh_dilcher"):
        assert get_entry(identity).id == identity


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        get_entry("thm99")
    with pytest.raises(UnknownIdentityError):
        select(ids=["thm99"])
    with pytest.raises(UnknownIdentityError):
        select(tags=["no-such-tag"])


def test_select_provenance():
    everything = select(everything=True, provenance="any")
    theorem = select(everything=True, provenance="theorem")
    printed = select(everything=True, provenance="printed")
    assert len(everything) == len(theorem) + len(printed)
    assert all(entry.provenance is Provenance.PRINTED for entry in printed)
    # explicit ids bypass the provenance filter
    assert [e.id for e in select(ids=["seiffert_remark"], provenance="theorem")] == ["seiffert_remark"]


def test_select_keeps_catalog_order():
    chosen = select(ids=["eq7_fib_balancing", "eq1_fib_self"])
    assert [entry.id for entry in chosen] == ["eq1_fib_self", "eq7_fib_balancing"]


def test_carlitz_entries_for_every_family():
    for name in WEIGHT_FAMILIES:
        assert get_entry("carlitz_%s_fibonacci" % name)
        assert get_entry("carlitz_%s_cheb" % name).scalar_domain is ScalarDomain.POLYNOMIAL


def test_theorem_catalog_core_run():
    report = sweep(select(everything=True, provenance="theorem"), range(1, 4), range(0, 11))
    assert_no_failures(report)
    assert report.total.passed > 0


def test_classical_convolutions():
    report = sweep(select(tags=["classical"]), range(1, 3), range(0, 61))
    assert_no_failures(report)
    assert report.total.passed == 7 * 61
    assert report.total.skipped == 7 * 61


def test_closed_form_rational_entries():
    entries = [e for e in _theorem(select(tags=["closed-form"])) if e.scalar_domain is ScalarDomain.RATIONAL]
    assert len(entries) == 6 + 5 * len(LUCAS_PAIRS)
    assert_no_failures(sweep(entries, range(1, 7), range(0, 41)))


def test_chebyshev_entries():
    entries = _theorem(select(tags=["chebyshev"]))
    assert_no_failures(sweep([e for e in entries if "carlitz" not in e.tags], range(1, 5), range(0, 16)))


def test_lucas_jacobsthal_for_negative_strides():
    report = sweep([get_entry("thm4_lucas_jacobsthal_general")], range(-4, 7), range(0, 31))
    assert_no_failures(report)
    skipped = {res.r for res in report.cells if res.status is Status.SKIPPED}
    assert skipped == {0}


def test_first_and_second_kind_pairs():
    entries = _theorem(select(tags=["first-kind", "second-kind"]))
    assert len(entries) >= 10
    assert_no_failures(sweep(entries, range(1, 5), range(0, 31)))


def test_random_horadam_entries():
    assert_no_failures(sweep(select(tags=["random"]), range(1, 4), range(0, 26)))


def test_symmetric_weight_entries():
    report = sweep(select(tags=["carlitz"]), range(1, 5), range(0, 21))
    assert_no_failures(report)
    for res in report.cells:
        if res.identity.startswith("carlitz_binomial_2n_2k") and res.n == 0:
            assert res.status is Status.SKIPPED


def test_agoh_dilcher():
    report = sweep([get_entry("agoh_dilcher")], range(1, 2), range(1, 13))
    assert report.total.passed == 12


@pytest.mark.parametrize(
    "identity",
    ["thm4_example_r2", "thm4_example_r3", "thm4_printed", "fib_pell_example_r1", "lucas_jlucas_example_r1"],
)
def test_printed_entries_that_hold(identity):
    report = sweep([get_entry(identity)], range(1, 5), range(0, 21))
    assert_no_failures(report)
    assert report.total.passed > 0


@pytest.mark.parametrize(
    "identity, r, n",
    [
        ("fib_pell_example_r2", 2, 2),
        ("pell_jacobsthal_example_r1", 1, 0),
        ("seiffert_remark", 1, 0),
        ("cheb_tu_printed", 1, 0),
        ("cheb_sq_tu_printed", 1, 1),
    ],
)
def test_printed_entries_with_counterexamples(identity, r, n):
    report = sweep([get_entry(identity)], range(1, 5), range(0, 21))
    worst = report.minimal_counterexample(identity)
    assert worst is not None
    assert (worst.r, worst.n) == (r, n)
    assert worst.lhs is not None and worst.rhs is not None


def test_fibonacci_pell_stride_two_hand_check():
    report = sweep([get_entry("fib_pell_example_r2")], range(2, 3), range(2, 3))
    (cell,) = report.cells
    assert (cell.lhs, cell.rhs) == (24, 6)


def test_every_printed_entry_is_adjudicated():
    printed = select(everything=True, provenance="printed")
    report = sweep(printed, range(1, 5), range(0, 21))
    for identity, tally in report.tallies.items():
        assert tally.passed + tally.failed > 0, identity


@pytest.mark.parametrize(
    "identity, stride",
    [
        ("eq1_fib_self", 1),
        ("eq7_fib_balancing", 2),
        ("thm4_example_r2", 2),
        ("thm4_example_r3", 3),
        ("fib_pell_example_r3", 3),
        ("pell_jacobsthal_example_r2", 2),
        ("lucas_jlucas_example_r3", 3),
        ("agoh_dilcher", 1),
    ],
)
def test_fixed_stride_entries_run_at_their_own_stride(identity, stride):
    report = sweep([get_entry(identity)], range(-1, 5), range(0, 6))
    for res in report.cells:
        if res.r == stride:
            assert res.status is not Status.SKIPPED, res
        else:
            assert res.status is Status.SKIPPED
            assert res.reason == "fixed stride; checked at r = %d only" % stride
    for res in report.failures:
        assert res.r == stride
