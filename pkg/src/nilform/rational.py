"""Exact rational scalars.

Everything downstream computes over Q with no rounding anywhere.  The
scalar type is gmpy2.mpq when available (it is several times faster than
fractions.Fraction and stores values in lowest terms with a positive
denominator), falling back to Fraction otherwise.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq, mpz as _mpz

    Rational = type(_mpq(1, 2))

    def rat(p=0, q=1):
        """Build a rational from ints, a string like '3/4', or another rational."""
        return _mpq(p, q) if q != 1 else _mpq(p)

    def _is_integer(x) -> bool:
        return isinstance(x, int) or isinstance(x, type(_mpz(0)))

except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction

    def rat(p=0, q=1):
        return Fraction(p, q) if q != 1 else Fraction(p)

    def _is_integer(x) -> bool:
        return isinstance(x, int)


ZERO = rat(0)
ONE = rat(1)


def rat_str(x) -> str:
    """Canonical 'p' or 'p/q' form (q > 0, lowest terms)."""
    x = rat(x)
    num, den = x.numerator, x.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def parse_rat(s):
    """Parse the canonical string form back into a rational."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return rat(int(p), int(q))
    return rat(int(s))


def is_rational(x) -> bool:
    return isinstance(x, (Rational, Fraction)) or _is_integer(x)
