"""Exact arithmetic in Q(w), w a primitive 6th root of unity.

Elements are stored as ``a + b*w`` with rational ``a`` and ``b`` and reduced
with ``w**2 = w - 1``.  Coordinates are ``gmpy2.mpq``, always in lowest
terms with a positive denominator, so structural equality is field equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["CycNum", "omega_pow", "omega_antisym", "ZERO", "ONE", "OMEGA"]


_MPQ = type(mpq(0))
# operand types mixed in directly, without wrapping in a CycNum
_SCALARS = (int, Fraction, _MPQ)


def _rat(x):
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Rational):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        # Fraction's parser is more permissive (leading "+", decimals)
        f = Fraction(x.strip())
        return mpq(f.numerator, f.denominator)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


class CycNum:
    """``a + b*w`` with ``w**2 = w - 1``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _rat(a))
        object.__setattr__(self, "b", _rat(b))

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    def __reduce__(self):
        return (CycNum, (self.a, self.b))

    @classmethod
    def _make(cls, a, b) -> "CycNum":
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        return obj

    @classmethod
    def coerce(cls, x) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        return cls._make(_rat(x), _Q0)

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CycNum):
            if isinstance(other, _SCALARS):
                return CycNum._make(self.a + _rat(other), self.b)
            return NotImplemented
        return CycNum._make(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, CycNum):
            if isinstance(other, _SCALARS):
                return CycNum._make(self.a - _rat(other), self.b)
            return NotImplemented
        return CycNum._make(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        if isinstance(other, _SCALARS):
            return CycNum._make(_rat(other) - self.a, -self.b)
        return NotImplemented

    def __neg__(self):
        return CycNum._make(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            if isinstance(other, _SCALARS):
                other = _rat(other)
                return CycNum._make(self.a * other, self.b * other)
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        bb = b1 * b2
        return CycNum._make(a1 * a2 - bb, a1 * b2 + a2 * b1 + bb)

    __rmul__ = __mul__

    def norm(self):
        """Field norm ``a**2 + a*b + b**2`` (the product with the conjugate)."""
        a, b = self.a, self.b
        return a * a + a * b + b * b

    def conjugate(self) -> "CycNum":
        # complex conjugation sends w to 1 - w
        return CycNum._make(self.a + self.b, -self.b)

    def inv(self) -> "CycNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        return CycNum._make((self.a + self.b) / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(w)")
            other = _rat(other)
            return CycNum._make(self.a / other, self.b / other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        if isinstance(other, _SCALARS):
            return CycNum.coerce(other) * self.inv()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.a == other.a and self.b == other.b
        if isinstance(other, _SCALARS):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    # -- rendering ---------------------------------------------------------

    def __repr__(self):
        return f"CycNum({str(self.a)!r}, {str(self.b)!r})"

    def __str__(self):
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        mag = "w" if abs(b) == 1 else f"{abs(b)}*w"
        sign = "-" if b < 0 else "+"
        if a == 0:
            return mag if b > 0 else "-" + mag
        return f"{a}{sign}{mag}"

    @classmethod
    def parse(cls, text: str) -> "CycNum":
        """Inverse of ``str``; also accepts ``w``, ``-w`` and ``2w``."""
        s = text.replace(" ", "").replace("ω", "w")
        if not s:
            raise ValueError("empty CycNum literal")
        try:
            if "w" not in s:
                return cls._make(_rat(s), _Q0)
            if not s.endswith("w") or s.count("w") > 1:
                raise ValueError
            head = s[:-1].removesuffix("*")
            split = max(head.rfind("+"), head.rfind("-"))
            if split > 0:
                a_txt, b_txt = head[:split], head[split:]
            else:
                a_txt, b_txt = "0", head
            if b_txt in ("", "+"):
                b = mpq(1)
            elif b_txt == "-":
                b = mpq(-1)
            else:
                b = _rat(b_txt)
            return cls._make(_rat(a_txt), b)
        except ValueError:
            raise ValueError(f"bad CycNum literal: {text!r}") from None


_Q0 = mpq(0)
ZERO = CycNum._make(_Q0, _Q0)
ONE = CycNum._make(mpq(1), _Q0)
OMEGA = CycNum._make(_Q0, mpq(1))

_POW_TABLE = (
    ONE,
    OMEGA,
    CycNum(-1, 1),
    CycNum(-1, 0),
    CycNum(0, -1),
    CycNum(1, -1),
)


def omega_pow(n: int) -> CycNum:
    """``w**n`` for any integer ``n``."""
    return _POW_TABLE[n % 6]


_SQRT3I = CycNum(-1, 2)


def omega_antisym(d: int) -> CycNum:
    """``w**d - w**-d``: 0, ``2w-1`` or ``1-2w`` depending on ``d mod 6``."""
    r = d % 6
    if r in (0, 3):
        return ZERO
    if r in (1, 2):
        return _SQRT3I
    return -_SQRT3I
