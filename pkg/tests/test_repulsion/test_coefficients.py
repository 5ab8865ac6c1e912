import math

import pytest

from chebkit.dataclasses import Variant
from chebkit.exceptions import DomainError
from chebkit.repulsion import (
    DH_TABLE,
    certified_constant,
    coeff_all_zeros,
    coeff_no_archimedean,
    coeff_real_zeros,
    no_archimedean_alpha,
)


def test_first_row_coefficient():
    K, correction = coeff_all_zeros(3.07, 1)
    assert K <= 1.4883
    assert K == pytest.approx(1.4883, abs=5e-4)
    assert 24 * K < 35.8
    assert correction > 0


def test_real_zeros_coefficient():
    K, _ = coeff_real_zeros(5.8)
    assert K <= 0.6882
    assert K == pytest.approx(0.6882, abs=5e-4)
    assert 24 * K < 16.6


def test_real_zeros_without_archimedean_terms():
    # G_1(1; 0) and G_2(1; 0) are negative, the max clamps at 0
    assert coeff_real_zeros(1).K == pytest.approx(2.0, abs=1e-15)


@pytest.mark.parametrize("T, alpha, C", DH_TABLE)
def test_tabled_rows(T, alpha, C):
    K, _ = coeff_all_zeros(alpha, T)
    assert K > 1
    assert 24 * K < C


@pytest.mark.parametrize("alpha", [1, 3.07, 7.73, 15.7])
def test_nondecreasing_in_height(alpha):
    heights = [1, 2, 3.5, 8.7, 22, 54, 134, 332, 825, 2048, 5089, 12646]
    values = [coeff_all_zeros(alpha, T).K for T in heights]
    assert values == sorted(values)


def test_no_archimedean_decreases_to_limits():
    alphas = [1, 2, 10, 100, 1000, 10000]
    values = [coeff_no_archimedean(alpha) for alpha in alphas]
    real = [coeff_no_archimedean(alpha, Variant.REAL_ZEROS) for alpha in alphas]
    assert values == sorted(values, reverse=True)
    assert real == sorted(real, reverse=True)
    assert values[-1] == pytest.approx(1, abs=2e-4)
    assert real[-1] == pytest.approx(0.5, abs=2e-4)
    assert coeff_no_archimedean(3, "all-zeros") == coeff_no_archimedean(3)
    assert coeff_no_archimedean(3, "no-arch-real") == coeff_no_archimedean(
        3, "real-zeros"
    )


def test_no_archimedean_constants():
    alpha = no_archimedean_alpha(1.0001)
    assert alpha == pytest.approx(10000.25, rel=1e-6)
    assert coeff_no_archimedean(alpha * (1 + 1e-9)) <= 1.0001
    assert coeff_no_archimedean(alpha * (1 - 1e-6)) > 1.0001
    assert 24 * 1.0001 < 24.01

    assert 24 * coeff_no_archimedean(2500) < 24.01
    assert 24 * coeff_no_archimedean(2500, Variant.REAL_ZEROS) < 12.01


def test_no_archimedean_alpha_real_zeros():
    alpha = no_archimedean_alpha(0.5001, Variant.REAL_ZEROS)
    assert coeff_no_archimedean(alpha * (1 + 1e-9), Variant.REAL_ZEROS) <= 0.5001


@pytest.mark.parametrize(
    "K, expected",
    [(1.488287, 35.8), (1.5, 36.1), (1.679137, 40.3), (0.688104, 16.6)],
)
def test_certified_constant(K, expected):
    assert certified_constant(K) == expected
    assert 24 * K < certified_constant(K)


def test_certified_constant_two_decimals():
    assert certified_constant(1.0004, decimals=2) == 24.01


@pytest.mark.parametrize(
    "call",
    [
        lambda: coeff_all_zeros(0.99, 1),
        lambda: coeff_all_zeros(3, 0.5),
        lambda: coeff_real_zeros(0),
        lambda: coeff_no_archimedean(0.5),
        lambda: coeff_no_archimedean(2, "bogus"),
    ],
)
def test_out_of_range(call):
    with pytest.raises(DomainError):
        call()


def test_variant_parse():
    assert Variant.parse("real-zeros") is Variant.REAL_ZEROS
    assert Variant.parse(Variant.NO_ARCH) is Variant.NO_ARCH
    assert Variant.NO_ARCH_REAL.real_zeros and not Variant.NO_ARCH_REAL.archimedean
    assert math.isclose(24 * coeff_real_zeros(5.8).K, 16.5145, abs_tol=1e-3)
