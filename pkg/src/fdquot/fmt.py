"""JSON conventions for exact rationals.

A rational renders as a plain int when integral and as the string "p/q"
otherwise, so G2's weight [2, 1] stays an integer vector while a half sum
like [9/2, 3] round-trips exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def rational_json(x):
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def rational_from_json(v):
    if isinstance(v, bool):
        raise InputError(f"expected a rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {v!r}") from exc
    raise InputError(f"expected a rational, got {v!r}")


def vector_json(vec):
    return [rational_json(x) for x in vec]


def vector_from_json(v):
    if not isinstance(v, (list, tuple)):
        raise InputError(f"expected a vector, got {v!r}")
    return tuple(rational_from_json(x) for x in v)
