from fractions import Fraction

import pytest
from seqconv.exactmath import Polynomial
from seqconv.exceptions import UnsupportedClosedFormError
from seqconv.exceptions import WeightContextError
from seqconv.exceptions import WeightDomainError
from seqconv.weights import WEIGHT_FAMILIES
from seqconv.weights import WeightContext
from seqconv.weights import WeightFamily
from seqconv.weights import agoh_dilcher_rhs
from seqconv.weights import bernoulli_poly
from seqconv.weights import get_family
from seqconv.weights import in_domain
from seqconv.weights import weight_sum_brute
from seqconv.weights import weight_sum_closed
from seqconv.weights import weight_value

CONTEXTS = [WeightContext(r=r, p=p, q=q) for r in range(1, 5) for p, q in ((1, -1), (2, -1), (1, -2))]


def test_twelve_families_registered():
    assert len(WEIGHT_FAMILIES) == 12


@pytest.mark.parametrize("name", list(WEIGHT_FAMILIES))
def test_weights_are_symmetric(name):
    family = get_family(name)
    ctx = WeightContext(r=2, p=1, q=-1)
    for n in range(1, 9):
        for k in range(n + 1):
            assert weight_value(family, ctx, n, k) == weight_value(family, ctx, n, n - k)


@pytest.mark.parametrize("name", list(WEIGHT_FAMILIES))
def test_closed_row_sums_match_brute_force(name):
    family = get_family(name)
    for ctx in CONTEXTS:
        if family.polynomial and ctx.p != 1:
            continue
        for n in range(0, 21 if not family.polynomial else 13):
            if not in_domain(family, ctx, n):
                continue
            assert weight_sum_closed(family, ctx, n) == weight_sum_brute(family, ctx, n), (name, ctx, n)


def test_binomial_2n_2k_excludes_zero():
    family = get_family("binomial_2n_2k")
    assert not in_domain(family, WeightContext(), 0)
    with pytest.raises(WeightDomainError):
        weight_sum_closed(family, WeightContext(), 0)
    assert weight_sum_closed(family, WeightContext(), 3) == 32


def test_known_row_sums():
    ctx = WeightContext()
    assert weight_sum_closed(get_family("k_nk"), ctx, 4) == 10
    assert weight_sum_closed(get_family("k2_nk2"), ctx, 3) == 8
    assert weight_sum_closed(get_family("binomial_squared"), ctx, 4) == 70
    assert weight_sum_closed(get_family("binomial_3n_3k"), ctx, 2) == 22


def test_weight_k_out_of_range():
    with pytest.raises(WeightDomainError):
        weight_value(get_family("binomial"), WeightContext(), 3, 4)


def test_sequence_weights_need_context():
    with pytest.raises(WeightContextError):
        weight_sum_brute(get_family("lucas_uu"), WeightContext(r=1), 3)
    with pytest.raises(WeightContextError):
        weight_value(get_family("cheb_tt"), WeightContext(), 2, 1)
    with pytest.raises(WeightContextError):
        get_family("harmonic")


def test_family_without_closed_sum():
    family = WeightFamily("plain", lambda ctx, n, k: Fraction(1))
    assert weight_sum_brute(family, WeightContext(), 5) == 6
    with pytest.raises(UnsupportedClosedFormError):
        weight_sum_closed(family, WeightContext(), 5)


def test_bernoulli_polynomials():
    assert bernoulli_poly(1) == Polynomial([Fraction(-1, 2), 1])
    assert bernoulli_poly(2) == Polynomial([Fraction(1, 6), -1, 1])
    assert bernoulli_poly(4)(0) == Fraction(-1, 30)


@pytest.mark.parametrize("n", range(1, 13))
def test_bernoulli_self_convolution(n):
    assert weight_sum_brute(get_family("bernoulli"), WeightContext(), n) == agoh_dilcher_rhs(n)


def test_bernoulli_self_convolution_at_zero():
    assert agoh_dilcher_rhs(0) == 1
