"""Fast exact rationals for the path model.

gmpy2's mpq is used when available; it hashes and compares like
fractions.Fraction, so either backend yields identical canonical paths.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as Q
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Q = Fraction
    HAVE_GMPY2 = False


def to_fraction(x):
    """Convert an mpq (or int, or Fraction) to a plain Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


def fmt_rational(x):
    """Render a rational as 'p' or 'p/q'."""
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
