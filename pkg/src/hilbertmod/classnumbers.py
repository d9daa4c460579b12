"""Class numbers of imaginary quadratic discriminants.

h(D) is the number of classes of primitive positive-definite binary
quadratic forms a*x^2 + b*x*y + c*y^2 of discriminant D = b^2 - 4ac < 0.
Each class contains exactly one reduced form, so h(D) is computed by
exhaustively listing reduced forms: |b| <= a <= c with b >= 0 whenever
|b| = a or a = c, and gcd(a, b, c) = 1 (only primitive forms are counted;
conventions differ, so this is worth stating).  The reduction inequalities
force a <= sqrt(|D|/3), which makes the enumeration finite.
"""

from __future__ import annotations

from math import gcd, isqrt

__all__ = ["is_discriminant", "reduced_forms", "class_number"]


def is_discriminant(D: int) -> bool:
    """True for negative D congruent to 0 or 1 mod 4."""
    return D < 0 and D % 4 in (0, 1)


def _require_discriminant(D: int) -> None:
    if not is_discriminant(D):
        raise ValueError(f"{D} is not a negative discriminant (need D < 0, D = 0 or 1 mod 4)")


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """All reduced primitive forms (a, b, c) of discriminant D, sorted."""
    _require_discriminant(D)
    forms = []
    a_bound = isqrt(-D // 3)
    for a in range(1, a_bound + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
    return sorted(forms)


def class_number(D: int) -> int:
    """h(D): the number of reduced primitive forms (always >= 1)."""
    return len(reduced_forms(D))
