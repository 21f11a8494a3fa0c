"""Exact rational scalars and their textual form.

The scalar type of the whole package is :class:`fractions.Fraction`, which
already maintains the canonical reduced form (gcd(|num|, den) = 1, den >= 1).
This module pins the strict text grammar used by the JSON formats and the
CLI: optional minus sign, decimal digits, optional ``/<positive digits>``.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rat = Fraction

_RAT_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rat(text: str) -> Rat:
    """Parse the strict rational grammar, e.g. ``-59/4`` or ``3``."""
    s = text.strip()
    if not _RAT_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rat(value: Rat) -> str:
    """Inverse of :func:`parse_rat`; ``str`` of Fraction is already canonical."""
    return str(value)
