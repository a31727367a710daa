"""Exact rational scalar backend.

Two interchangeable kernels are provided:

* ``gmpy2``: ``gmpy2.mpq``, a C implementation of GMP rationals (fast path).
* ``fraction``: :class:`fractions.Fraction` from the standard library (pure
  Python fallback).

Both keep values reduced with a positive denominator, hash identically and
compare equal across types, so results do not depend on the backend.  The
backend is chosen once at import time from the ``POLYFACE_SCALAR``
environment variable (``auto``, ``gmpy2`` or ``fraction``; default
``auto`` picks gmpy2 when importable).
"""

import os
import re
from fractions import Fraction

_requested = os.environ.get("POLYFACE_SCALAR", "auto").strip().lower()
if _requested not in ("auto", "gmpy2", "fraction"):
    raise ImportError(f"POLYFACE_SCALAR must be auto, gmpy2 or fraction, not {_requested!r}")

Q = Fraction
BACKEND = "fraction"
if _requested in ("auto", "gmpy2"):
    try:
        import gmpy2

        Q = gmpy2.mpq
        BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise

ZERO = Q(0)
ONE = Q(1)

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def scalar(value):
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to the backend scalar."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Q(value)


def parse_rational(text):
    """Parse ``p`` or ``p/q`` with ``q > 0``. Raises ValueError otherwise."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Q(int(num), int(den))
    return Q(int(text))


def fmt(x):
    """Render a scalar as ``p`` or ``p/q``."""
    x = Q(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return f"{int(x.numerator)}/{int(x.denominator)}"
