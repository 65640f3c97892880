from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from a22lead.cyclotomic import ONE, OMEGA, ZERO, CycNum, omega_antisym, omega_pow
from conftest import cycnums, nonzero_cycnums

MANY = settings(max_examples=10_000, deadline=None)


@MANY
@given(cycnums, cycnums, cycnums)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x and x * ONE == x
    assert x - x == ZERO


@MANY
@given(nonzero_cycnums, cycnums)
def test_division(x, y):
    assert x * x.inv() == ONE
    assert (y / x) * x == y


@given(cycnums, cycnums)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * x.conjugate() == CycNum(x.norm())


@MANY
@given(st.integers(-10_000, 10_000), st.integers(-10_000, 10_000))
def test_omega_pow_laws(m, n):
    assert omega_pow(m) * omega_pow(n) == omega_pow(m + n)
    assert omega_pow(m + 6) == omega_pow(m)
    assert omega_antisym(m) == omega_pow(m) - omega_pow(-m)
    assert omega_antisym(-m) == -omega_antisym(m)


def test_omega_is_primitive_sixth_root():
    assert OMEGA * OMEGA == OMEGA - ONE
    assert [OMEGA ** k == ONE for k in range(1, 7)] == [False] * 5 + [True]
    assert OMEGA ** -1 == omega_pow(5) == CycNum(1, -1)
    assert omega_antisym(1) == CycNum(-1, 2)
    assert omega_antisym(3) == ZERO


def test_inverse_formula():
    # (a + b w)^-1 = (a + b - b w) / (a^2 + a b + b^2)
    x = CycNum(2, 3)
    assert x.inv() == CycNum(Fraction(5, 19), Fraction(-3, 19))


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_mixed_scalars():
    x = CycNum(1, 2)
    assert x + 1 == CycNum(2, 2) == 1 + x
    assert 1 - x == CycNum(0, -2)
    assert x * Fraction(1, 2) == CycNum(Fraction(1, 2), 1)
    assert CycNum(3) == 3 and CycNum(3) == Fraction(3)
    assert hash(CycNum(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert CycNum(1, 1) != 1


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.a = 2


@pytest.mark.parametrize("text, expected", [
    ("0", ZERO),
    ("w", OMEGA),
    ("-w", -OMEGA),
    ("2w", CycNum(0, 2)),
    ("-6*w", CycNum(0, -6)),
    ("-2-24w", CycNum(-2, -24)),
    ("6 - 6ω", CycNum(6, -6)),
    ("3/2", CycNum(Fraction(3, 2))),
    ("-1+2*w", CycNum(-1, 2)),
    ("1/3-1/2*w", CycNum(Fraction(1, 3), Fraction(-1, 2))),
])
def test_parse(text, expected):
    assert CycNum.parse(text) == expected


@pytest.mark.parametrize("text", ["", "x", "w*w", "1+", "2ww", "1/0"])
def test_parse_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        CycNum.parse(text)


@given(cycnums)
def test_str_round_trip(x):
    assert CycNum.parse(str(x)) == x
    assert eval(repr(x), {"CycNum": CycNum}) == x


def test_pickle():
    import pickle

    x = CycNum(Fraction(-2, 3), 5)
    assert pickle.loads(pickle.dumps(x)) == x
