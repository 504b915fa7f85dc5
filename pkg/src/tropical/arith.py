"""Max-plus arithmetic on exact rationals extended by a bottom element.

Tropical addition is ``max`` and tropical multiplication is ordinary ``+``.
Values are :class:`TropNum` instances wrapping a :class:`fractions.Fraction`
or the distinguished :data:`BOTTOM` (minus infinity).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

RationalLike = Union[int, Fraction, str]


class DomainError(ValueError):
    """Raised when an operation has no value for Bottom (e.g. its inverse)."""


@total_ordering
class TropNum:
    """A tropical scalar: an exact rational or Bottom.

    ``TropNum(None)`` is Bottom; use :data:`BOTTOM` rather than building it.
    Rationals are held as ``Fraction`` so equality and hashing are structural.
    """

    __slots__ = ("_value",)

    def __init__(self, value: RationalLike | None):
        if value is None:
            self._value = None
        elif isinstance(value, TropNum):
            self._value = value._value
        elif isinstance(value, float):
            raise TypeError("floats are not exact; pass a Fraction or a string")
        else:
            self._value = Fraction(value)

    @classmethod
    def parse(cls, text: str) -> "TropNum":
        """Read ``"1.5"``, ``"3/2"``, ``"-7"`` or ``"-inf"``."""
        s = text.strip()
        if s.lower() in ("-inf", "-infinity", "bottom"):
            return BOTTOM
        try:
            return cls(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a tropical number: {text!r}") from exc

    @property
    def is_bottom(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Fraction:
        """The rational value; raises :class:`DomainError` on Bottom."""
        if self._value is None:
            raise DomainError("Bottom has no rational value")
        return self._value

    def __eq__(self, other):
        if isinstance(other, TropNum):
            return self._value == other._value
        if isinstance(other, (int, Fraction)):
            return self._value is not None and self._value == other
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, TropNum):
            other = TropNum(other)
        if self._value is None:
            return other._value is not None
        if other._value is None:
            return False
        return self._value < other._value

    def __hash__(self):
        return hash(("TropNum", self._value))

    def __str__(self):
        return "-inf" if self._value is None else str(self._value)

    def __repr__(self):
        return f"TropNum({str(self)!r})"


BOTTOM = TropNum(None)
ZERO = TropNum(0)  # multiplicative neutral


def as_trop(a) -> TropNum:
    return a if isinstance(a, TropNum) else TropNum(a)


def trop_add(a, b) -> TropNum:
    """Tropical sum ``max(a, b)`` with Bottom as the least element."""
    a, b = as_trop(a), as_trop(b)
    return a if b <= a else b


def trop_mul(a, b) -> TropNum:
    """Tropical product ``a + b``; Bottom is absorbing."""
    a, b = as_trop(a), as_trop(b)
    if a.is_bottom or b.is_bottom:
        return BOTTOM
    return TropNum(a.value + b.value)


def trop_pow(a, n: int) -> TropNum:
    """Tropical power ``n * a``; negative ``n`` goes through the inverse ``-a``."""
    a = as_trop(a)
    if a.is_bottom:
        if n <= 0:
            raise DomainError(f"Bottom has no tropical power {n}")
        return BOTTOM
    return TropNum(n * a.value)


def trop_inv(a) -> TropNum:
    return trop_pow(a, -1)


def quant_add(x: float, y: float, t: float) -> float:
    """Maslov-deformed addition ``log_t(t**x + t**y)``.

    Evaluated as ``max + log_t(1 + t**-|x - y|)`` so that large arguments do
    not overflow. Requires ``t > 1``.
    """
    if not t > 1:
        raise ValueError(f"base must satisfy t > 1, got {t}")
    x, y = float(x), float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError("quant_add needs finite arguments")
    hi, gap = max(x, y), abs(x - y)
    log_t = math.log(t)
    return hi + math.log1p(math.exp(-gap * log_t)) / log_t
