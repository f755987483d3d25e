"""Exact scalar wire format.

Every scalar in the package is a :class:`fractions.Fraction`, which stores
values reduced with a positive denominator and compares by value.  On the
wire (JSON inputs and outputs) scalars are decimal integer strings or
``"p/q"`` fraction strings; JSON integers are accepted on input.  Floats are
never accepted and never emitted.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError

_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_scalar(value: object) -> Fraction:
    """Parse a JSON scalar (int or string) into an exact Fraction.

    Accepts Python ints and strings like ``"3"``, ``"-7"``, ``"5/3"``,
    ``"-1/2"``.  Rejects floats, bools, and any other string syntax.
    """
    if isinstance(value, bool):
        raise InputError(f"not an exact scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _SCALAR_RE.match(value):
            raise InputError(
                f"bad scalar {value!r}: expected a decimal integer or 'p/q'"
            )
        if "/" in value:
            num, den = value.split("/")
            if int(den) == 0:
                raise InputError(f"bad scalar {value!r}: zero denominator")
            return Fraction(int(num), int(den))
        return Fraction(int(value))
    raise InputError(f"not an exact scalar: {value!r} (floats are rejected)")


def format_scalar(value: Fraction) -> str:
    """Render a Fraction as ``"p/q"``, or just ``"p"`` when q = 1."""
    return str(value)


def as_fraction(value: Fraction | int) -> Fraction:
    """Coerce an in-process scalar; only ints and Fractions are exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"not an exact scalar: {value!r} (floats are rejected)")
    return Fraction(value)
