from fractions import Fraction

import pytest
from seqconv.exceptions import DegenerateDiscriminantError
from seqconv.exceptions import ParameterError
from seqconv.exceptions import UnknownSequenceError
from seqconv.sequences import NAMED_PARAMS
from seqconv.sequences import HoradamParams
from seqconv.sequences import binet_at
from seqconv.sequences import lucas_u
from seqconv.sequences import lucas_u_at
from seqconv.sequences import lucas_v
from seqconv.sequences import lucas_v_at
from seqconv.sequences import make_named
from seqconv.sequences import make_sequence
from seqconv.sequences import named
from seqconv.sequences import named_params


@pytest.mark.parametrize(
    "name, expected",
    [
        ("fibonacci", [0, 1, 1, 2, 3, 5, 8, 13]),
        ("lucas", [2, 1, 3, 4, 7, 11, 18, 29]),
        ("pell", [0, 1, 2, 5, 12, 29, 70, 169]),
        ("pell_lucas", [2, 2, 6, 14, 34, 82, 198, 478]),
        ("jacobsthal", [0, 1, 1, 3, 5, 11, 21, 43]),
        ("jacobsthal_lucas", [2, 1, 5, 7, 17, 31, 65, 127]),
        ("balancing", [0, 1, 6, 35, 204, 1189, 6930, 40391]),
        ("lucas_balancing", [1, 3, 17, 99, 577, 3363, 19601, 114243]),
    ],
)
def test_named_sequences(name, expected):
    seq = make_named(name)
    assert [seq[n] for n in range(len(expected))] == expected


def test_negative_indices():
    fib = make_named("F")
    assert [fib[-n] for n in range(1, 6)] == [1, -1, 2, -3, 5]
    jac = make_named("J")
    assert jac[-1] == Fraction(1, 2)
    assert jac[-2] == Fraction(-1, 4)
    # the cache grows in both directions without recomputing the seeds
    assert jac[3] == 3
    assert jac[-3] == Fraction(3, 8)


def test_lucas_values():
    assert lucas_u_at(1, -1, 10) == 55
    assert lucas_v_at(1, -1, 10) == 123
    assert lucas_u_at(2, -1, -2) == -2
    assert lucas_v_at(6, 1, 2) == 34


def test_symbols_share_instances():
    assert named("F") is named("fibonacci")
    assert named("j").name == "jacobsthal_lucas"


def test_unknown_sequence():
    with pytest.raises(UnknownSequenceError) as excinfo:
        named_params("tribonacci")
    assert "tribonacci" in str(excinfo.value)
    assert isinstance(excinfo.value, KeyError)


def test_zero_parameters_rejected():
    with pytest.raises(ParameterError):
        HoradamParams(0, 1, 0, 1)
    with pytest.raises(ParameterError):
        make_sequence(0, 1, 1, 0)


@pytest.mark.parametrize("name", sorted(NAMED_PARAMS))
def test_binet_matches_recurrence(name):
    seq = make_named(name)
    for n in range(-8, 16):
        assert binet_at(seq.params, n) == seq[n]


def test_binet_rejects_double_root():
    with pytest.raises(DegenerateDiscriminantError):
        binet_at(HoradamParams(0, 1, 2, 1), 3)


def test_binet_with_rational_parameters():
    seq = make_sequence(Fraction(1, 2), 3, Fraction(5, 2), Fraction(3, 2))
    for n in range(-4, 10):
        assert binet_at(seq.params, n) == seq[n]


def test_companion_is_second_kind():
    pell = make_named("pell")
    assert pell.companion()[3] == named("pell_lucas")[3]


def test_recurrence_holds_in_both_directions(horadam_pairs):
    for pair in horadam_pairs:
        for seq in pair:
            p, q = seq.params.p, seq.params.q
            for n in range(-30, 101):
                assert seq[n] == p * seq[n - 1] - q * seq[n - 2], (seq.params, n)


def test_second_kind_from_first_kind(horadam_pairs):
    for X, _ in horadam_pairs:
        p, q = X.params.p, X.params.q
        U, V = lucas_u(p, q), lucas_v(p, q)
        assert (U[0], U[1], V[0], V[1]) == (0, 1, 2, p)
        for n in range(-20, 41):
            assert V[n] == U[n + 1] - q * U[n - 1], (p, q, n)
