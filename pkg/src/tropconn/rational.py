"""Exact rational scalars used throughout the kernel.

gmpy2.mpq is used when available (it is much faster), with
fractions.Fraction as a drop-in fallback.  Both normalize to lowest
terms with a positive denominator, which canonical encodings rely on.
No floating point enters the kernel anywhere.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is normally present
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)


class RationalParseError(ValueError):
    """Raised when a value cannot be read as an exact rational."""


def as_rat(value):
    """Coerce an int, 'p/q' string, or rational to Rat.

    Floats are rejected: they would silently break exactness.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise RationalParseError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Rat(value)
    if isinstance(value, str):
        return parse_rat(value)
    try:
        num = value.numerator
        den = value.denominator
    except AttributeError:
        raise RationalParseError(f"not an exact rational: {value!r}") from None
    return Rat(int(num), int(den))


def parse_rat(text):
    """Parse 'p/q' or a plain integer string into Rat."""
    s = text.strip()
    try:
        if "/" in s:
            num_s, den_s = s.split("/", 1)
            num, den = int(num_s), int(den_s)
            if den == 0:
                raise RationalParseError(f"zero denominator in {text!r}")
            return Rat(num, den)
        return Rat(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, RationalParseError):
            raise
        raise RationalParseError(f"malformed rational {text!r}") from None


def rat_str(x) -> str:
    """Render as 'p/q', or 'p' when the denominator is 1."""
    return str(x)


def rat_to_json(x):
    """JSON encoding: plain int when integral, 'p/q' string otherwise."""
    if x.denominator == 1:
        return int(x.numerator)
    return str(x)
