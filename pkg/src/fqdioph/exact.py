"""Exact comparisons involving sqrt(q)."""

from fractions import Fraction


def le_sqrt(a, b, q):
    """Exactly decide a <= b * sqrt(q) for rationals a, b and integer q >= 0."""
    a, b = Fraction(a), Fraction(b)
    if b >= 0:
        return a <= 0 or a * a <= b * b * q
    # b < 0: need a <= -(|b| sqrt q), so a must be negative with a^2 >= b^2 q
    return a < 0 and a * a >= b * b * q
