"""
Exact rational numbers for the mean-payoff expression analyzer

Every weight, threshold and coordinate in the system is a ``fractions.Fraction``;
no floating point value is ever produced.
"""

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ..utils.exceptions import ParseException

Rational = Fraction
Vector = tuple[Fraction, ...]

_RATIONAL_PATTERN = re.compile(r"^\s*([-+]?\d+)(?:\s*/\s*([-+]?\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q`` (q > 0) into a canonical Fraction.

    Decimal notation is rejected to keep inputs exact.
    """
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise ParseException(f"bad rational literal '{text}'")

    numerator = int(match.group(1))
    if match.group(2) is None:
        return Fraction(numerator)

    denominator = int(match.group(2))
    if denominator <= 0:
        raise ParseException(f"bad rational literal '{text}': denominator must be positive")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Render as ``p`` or ``p/q``"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_canonical(value: Fraction) -> bool:
    """Check the canonical-form invariant (positive denominator, coprime parts)"""
    return value.denominator > 0 and gcd(abs(value.numerator), value.denominator) == 1


def assert_canonical(values: Iterable[Fraction]) -> None:
    """Debug assertion hook for the canonical-form invariant"""
    for value in values:
        assert isinstance(value, Fraction), f"non-rational value {value!r}"
        assert is_canonical(value), f"non-canonical rational {value!r}"


def vector(values: Iterable) -> Vector:
    """Build a rational vector from ints, Fractions or rational strings"""
    return tuple(
        parse_rational(value) if isinstance(value, str) else Fraction(value)
        for value in values
    )


def mean(vectors: Sequence[Vector]) -> Vector:
    """Coordinatewise mean of a nonempty list of vectors"""
    count = len(vectors)
    return tuple(sum(column, Fraction(0)) / count for column in zip(*vectors))


def pointwise_min(vectors: Iterable[Vector]) -> Vector:
    """Coordinatewise minimum (the f_min operator)"""
    return tuple(min(column) for column in zip(*vectors))
