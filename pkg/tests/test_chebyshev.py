from fractions import Fraction

import pytest
from seqconv.chebyshev import ChebKind
from seqconv.chebyshev import cheb_eval
from seqconv.chebyshev import cheb_poly
from seqconv.chebyshev import cheb_tu_relation_check
from seqconv.chebyshev import t
from seqconv.chebyshev import u
from seqconv.exactmath import Polynomial


def test_low_degrees():
    assert cheb_poly("t", 3) == Polynomial([0, -3, 0, 4])
    assert cheb_poly("u", 3) == Polynomial([0, -4, 0, 8])
    assert cheb_poly(ChebKind.FIRST, 0) == 1
    assert u(2) == Polynomial([-1, 0, 4])


def test_negative_indices():
    assert u(-1) == 0
    for n in range(0, 12):
        assert t(-n) == t(n)
        assert u(-n - 2) == -u(n)


@pytest.mark.parametrize("n", range(-10, 25))
def test_first_kind_from_second_kind(n):
    assert cheb_tu_relation_check(n)


def test_evaluation_at_rational_points():
    assert cheb_eval("t", 2, Fraction(1, 2)) == Fraction(-1, 2)
    assert cheb_eval("u", 4, "1/2") == -1


def test_integer_coefficients():
    assert all(isinstance(c, int) for c in t(40).coefficients)
    assert t(40).leading == 2 ** 39


def test_kind_parse():
    assert ChebKind.parse("second") is ChebKind.SECOND
    with pytest.raises(ValueError):
        ChebKind.parse("v")


@pytest.mark.parametrize("n", range(0, 51))
def test_leading_coefficients_and_values_at_one(n):
    assert t(n).degree == u(n).degree == n
    assert t(n).leading == (2 ** (n - 1) if n else 1)
    assert u(n).leading == 2 ** n
    assert t(n)(1) == 1
    assert u(n)(1) == n + 1
    assert t(n)(-1) == (-1) ** n


@pytest.mark.parametrize("n", range(1, 30))
def test_recurrence_links_consecutive_degrees(n):
    x = Polynomial.x()
    assert t(n + 1) == 2 * x * t(n) - t(n - 1)
    assert u(n + 1) == 2 * x * u(n) - u(n - 1)
