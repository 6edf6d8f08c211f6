"""Exact rational scalars and their text encoding.

All values in this package are `fractions.Fraction` instances, which are kept
in lowest terms with a positive denominator by construction.  Floats are
rejected at every boundary: a binary float smuggled into an exact computation
silently poisons every equality test downstream.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or rational string to Fraction; refuse floats."""
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass an int, Fraction, or 'num/den' string"
        )
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse an optionally signed integer or 'integer/positive-integer' literal."""
    if not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render in lowest terms as 'num/den', omitting the denominator when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
