from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a22lead.qseries import (
    PSI_DENOMINATOR,
    PSI_NUMERATOR,
    TruncatedSeries,
    progression_product,
    psi_coefficients,
)

coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=15)


def test_psi_head():
    assert psi_coefficients(8) == [1, -6, 18, -36, 54, -66, 72, -78, 90]
    assert psi_coefficients(0) == [1]
    with pytest.raises(ValueError):
        psi_coefficients(-1)


def test_psi_identity():
    a = TruncatedSeries(psi_coefficients(40))
    assert a * TruncatedSeries(PSI_DENOMINATOR, 40) == TruncatedSeries(PSI_NUMERATOR, 40)
    assert all(isinstance(c, int) for c in a)


def test_truncation_order():
    f = TruncatedSeries([1, 2, 3], 5)
    g = TruncatedSeries([1, 1], 2)
    assert (f * g).order == 2
    assert (f + g).coeffs == (2, 3, 3)
    assert f[5] == 0
    with pytest.raises(IndexError):
        f[6]
    with pytest.raises(ValueError):
        g.truncate(3)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    f, g, h = TruncatedSeries(a, 14), TruncatedSeries(b, 14), TruncatedSeries(c, 14)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == TruncatedSeries([0], 14)


@given(coeff_lists, st.sampled_from([1, -1]))
def test_inverse(a, c0):
    f = TruncatedSeries([c0] + a, 12)
    assert f * f.inv() == TruncatedSeries.one(12)


def test_rational_inverse():
    f = TruncatedSeries([Fraction(2), 1], 6)
    assert f.inv()[1] == Fraction(-1, 4)
    assert TruncatedSeries([2, 1], 2).inv() == TruncatedSeries([Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8)])
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([0, 1]).inv()


def brute_product(modulus, residues, sign, order):
    out = TruncatedSeries.one(order)
    for n in range(1, order + 1):
        if n % modulus in residues:
            factor = TruncatedSeries.one(order) - TruncatedSeries.monomial(n, order)
            out = out * (factor if sign == 1 else factor.inv())
    return out


@pytest.mark.parametrize("modulus, residues", [(1, {0}), (6, {1, 5}), (16, {2, 3, 4, 5, 11, 12, 13, 14}), (5, {1, 4})])
@pytest.mark.parametrize("sign", [1, -1])
def test_progression_product_matches_brute_force(modulus, residues, sign):
    assert progression_product(modulus, residues, sign, 30) == brute_product(modulus, residues, sign, 30)


def test_partition_numbers_and_euler():
    p = progression_product(1, {0}, -1, 10)
    assert list(p) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    euler = progression_product(1, {0}, 1, 15)
    # pentagonal number theorem
    assert [n for n, c in enumerate(euler) if c] == [0, 1, 2, 5, 7, 12, 15]


def test_rendering_and_json():
    f = TruncatedSeries([1, -2, Fraction(1, 2)])
    assert str(f) == "1 - 2*q + 1/2*q^2"
    assert str(TruncatedSeries([0, 0, 3])) == "3*q^2"
    assert str(TruncatedSeries([0], 4)) == "0"
    assert TruncatedSeries.from_json(f.to_json()) == f
    assert TruncatedSeries([Fraction(4, 2)]).coeffs == (2,)
    with pytest.raises(TypeError):
        TruncatedSeries([0.5])
