"""The exact rational type used for every constant.

``gmpy2.mpq`` when importable, else :class:`fractions.Fraction`.  Both are
exact; mpq is an order of magnitude faster on the gcd-heavy workloads here.
"""

import os

try:
    if os.environ.get("ORECALC_NO_GMPY"):
        raise ImportError
    from gmpy2 import mpq as Rational
    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rational
    RATIONAL_BACKEND = "fractions"

ZERO = Rational(0)
ONE = Rational(1)


def as_rational(value):
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to :data:`Rational`."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        if "/" in value:
            p, q = value.split("/")
            return Rational(int(p), int(q))
        return Rational(int(value))
    if isinstance(value, int):
        return Rational(value)
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is None or den is None:
        raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")
    return Rational(int(num), int(den))
