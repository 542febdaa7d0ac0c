"""Exact rational scalars and their wire format.

Every numeric value in this package is a :class:`fractions.Fraction`;
nothing is ever rounded.  On the wire rationals travel as strings,
``"p/q"`` in lowest terms with a positive denominator, or a bare integer
string when the denominator is 1 (``"0"``, ``"1"``, ``"3/4"``).
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class RationalFormatError(ValueError):
    """A string does not encode a rational number."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Raises RationalFormatError for anything else (floats included:
    this package never accepts inexact input).
    """
    if not isinstance(text, str):
        raise RationalFormatError(f"expected a rational string, got {text!r}")
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            d = int(den)
            if d <= 0:
                raise RationalFormatError(f"denominator must be positive in {text!r}")
            return Fraction(int(num), d)
        return Fraction(int(s))
    except RationalFormatError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise RationalFormatError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``"p/q"`` (or ``"p"`` when q == 1)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_grid(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list of rationals, e.g. ``"0,1/2,1"``."""
    items = [piece for piece in text.split(",") if piece.strip()]
    if not items:
        raise RationalFormatError(f"empty grid: {text!r}")
    return tuple(parse_rational(piece) for piece in items)


def check_unit_interval(value: Fraction, where: str = "value") -> Fraction:
    """Return ``value`` unchanged, raising ValueError unless 0 <= value <= 1."""
    if not (ZERO <= value <= ONE):
        raise ValueError(f"{where} {format_rational(value)} outside [0,1]")
    return value
