"""Exact rational arithmetic backend.

Every number that touches the LP, the cost bounds, or a report goes through
this module. gmpy2.mpq is used when importable (considerably faster on the
tableau pivots), fractions.Fraction otherwise. Floats are rejected on input;
they only appear in reports as clearly-labelled approximations.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpq = None
    HAVE_GMPY2 = False


if HAVE_GMPY2:

    def rat(p=0, q=1):
        """Exact rational p/q."""
        return _mpq(p, q)

else:  # pragma: no cover

    def rat(p=0, q=1):
        """Exact rational p/q."""
        return Fraction(p, q)


ZERO = rat(0)
ONE = rat(1)


def as_rat(value):
    """Coerce an int, Fraction, rational, or numeric string to the backend type.

    Strings may be integers ("3"), ratios ("7/2"), or decimals ("2.5"); all
    parse exactly. Floats raise TypeError: silently accepting them would let
    rounding error into paths that must certify exact inequalities.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return rat(value)
    if isinstance(value, str):
        f = Fraction(value)
        return rat(f.numerator, f.denominator)
    if isinstance(value, Fraction):
        return rat(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass a string or Fraction")
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return rat(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to rational")


def rat_str(x):
    """Canonical p/q string (always includes the denominator)."""
    x = as_rat(x)
    return f"{x.numerator}/{x.denominator}"


def rat_float(x):
    """Float approximation, for human-facing report fields only."""
    x = as_rat(x)
    return int(x.numerator) / int(x.denominator)


def is_integral(x):
    return as_rat(x).denominator == 1
