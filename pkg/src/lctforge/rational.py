"""Exact rational scalars.

Every number in this package is a ``fractions.Fraction``: reduced,
arbitrary-precision, denominator kept positive.  No floating point
anywhere.  This module only adds the p/q text round-trip used by the
certificate, ledger, and polynomial file formats.
"""

from fractions import Fraction

Rat = Fraction


def parse_rat(text):
    """Parse 'p/q' or 'p' into a Fraction.  Raises ValueError on junk."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def rat_str(x):
    """Render a Fraction as 'p/q', or 'p' when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
