"""Exact rational arithmetic shared by every other module.

``Rational`` is ``fractions.Fraction``: arbitrary precision, always stored
reduced (gcd of numerator and denominator is 1) with a positive denominator.
Nothing in the computational core ever touches floating point; decimal
approximations exist only in explicitly labeled display helpers elsewhere.
"""

from __future__ import annotations

from fractions import Fraction as Rational

__all__ = ["Rational", "rat_add", "rat_mul", "rat_neg", "rat_div", "rat_cmp"]


def rat_add(x: Rational, y: Rational) -> Rational:
    return x + y


def rat_mul(x: Rational, y: Rational) -> Rational:
    return x * y


def rat_neg(x: Rational) -> Rational:
    return -x


def rat_div(x: Rational, y: Rational) -> Rational:
    if y == 0:
        raise ZeroDivisionError("division of rationals by zero")
    return x / y


def rat_cmp(x: Rational, y: Rational) -> int:
    """Total order: -1 if x < y, 0 if x == y, 1 if x > y."""
    if x < y:
        return -1
    if x > y:
        return 1
    return 0
