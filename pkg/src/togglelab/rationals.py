"""Exact rational parsing and formatting.

All arithmetic in the library uses ``fractions.Fraction``; no value is ever
routed through binary floating point.  Decimal literals are converted exactly
(``0.7`` becomes ``7/10``).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer, or a decimal literal, exactly."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction, decimal_ok: bool = False) -> str:
    """Render ``value`` as ``p/q`` (or an exact decimal when allowed).

    With ``decimal_ok`` a value whose denominator divides a power of ten is
    printed as its exact decimal expansion; everything else stays ``p/q``.
    """
    if value.denominator == 1:
        return str(value.numerator)
    if decimal_ok:
        den, twos, fives = value.denominator, 0, 0
        while den % 2 == 0:
            den //= 2
            twos += 1
        while den % 5 == 0:
            den //= 5
            fives += 1
        if den == 1:
            exp = max(twos, fives)
            digits = abs(value.numerator) * 10**exp // value.denominator
            sign = "-" if value.numerator < 0 else ""
            text = f"{digits:0{exp + 1}d}"
            return f"{sign}{text[:-exp]}.{text[-exp:]}"
    return f"{value.numerator}/{value.denominator}"
