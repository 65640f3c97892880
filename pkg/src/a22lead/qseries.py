"""Truncated formal power series in q with exact coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "TruncatedSeries",
    "progression_product",
    "psi_coefficients",
    "PSI_NUMERATOR",
    "PSI_DENOMINATOR",
]


class TruncatedSeries:
    """Coefficients of ``q**0 .. q**order``.

    Binary operations truncate to the smaller order; the order is never
    promoted silently.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(_normalize(c) for c in coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    def __getitem__(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"q^{n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        f, g = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            fi = f[i]
            if not fi:
                continue
            for j in range(n + 1 - i):
                if g[j]:
                    out[i + j] += fi * g[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inv(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("constant term is zero")
        # +-1 keeps integral series integral; otherwise work over Q
        inv0 = c0 if c0 in (1, -1) else Fraction(1) / c0
        out = [inv0]
        f = self.coeffs
        for n in range(1, self.order + 1):
            s = 0
            for k in range(1, n + 1):
                if f[k]:
                    s += f[k] * out[n - k]
            out.append(-s * inv0)
        return TruncatedSeries(out, self.order)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> str:
        return json.dumps([_jsonable(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        data = json.loads(text)
        return cls([Fraction(c) if isinstance(c, str) else c for c in data])


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, (int, Fraction)):
        return c
    raise TypeError(f"series coefficients must be exact, got {type(c).__name__}")


def _jsonable(c):
    return c if isinstance(c, int) else str(c)


def progression_product(
    modulus: int, residues: Iterable[int], sign: int, order: int
) -> TruncatedSeries:
    """``prod (1 - q**n)**sign`` over ``n >= 1`` with ``n mod modulus`` in ``residues``."""
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    residues = {r % modulus for r in residues}
    coeffs = [1] + [0] * order
    for n in range(1, order + 1):
        if n % modulus not in residues:
            continue
        if sign == -1:
            # multiply by 1/(1 - q^n): running sum with stride n
            for k in range(n, order + 1):
                coeffs[k] += coeffs[k - n]
        else:
            for k in range(order, n - 1, -1):
                coeffs[k] -= coeffs[k - n]
    return TruncatedSeries(coeffs, order)


PSI_NUMERATOR = (1, -3, 4, -3, 1)
PSI_DENOMINATOR = (1, 3, 4, 3, 1)


@lru_cache(maxsize=None)
def _psi(order: int) -> tuple:
    num = TruncatedSeries([Fraction(c) for c in PSI_NUMERATOR], order)
    den = TruncatedSeries([Fraction(c) for c in PSI_DENOMINATOR], order)
    a = (num * den.inv()).coeffs
    if any(isinstance(c, Fraction) for c in a):
        raise ArithmeticError("Psi expansion produced a non-integral coefficient")
    return a


def psi_coefficients(order: int) -> list[int]:
    """Coefficients ``a_0 .. a_order`` of the expansion of
    ``(1 - 3x + 4x^2 - 3x^3 + x^4) / (1 + 3x + 4x^2 + 3x^3 + x^4)``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return list(_psi(order))

