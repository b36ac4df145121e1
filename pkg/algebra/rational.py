"""
Exact rational scalars: conversion, parsing and canonical formatting
"""

from fractions import Fraction
from numbers import Rational as _RationalABC


def to_rational(value):
    """Convert an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: every value handled by the engine must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(value, _RationalABC):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} {value!r} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (optional sign, surrounding blanks allowed)"""
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("empty rational literal")
    numerator, sep, denominator = cleaned.partition('/')
    try:
        p = int(numerator.strip())
        q = int(denominator.strip()) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(value) -> str:
    """Canonical string form: "p" when the denominator is 1, else "p/q" in lowest terms"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
