"""Real quadratic fields Q(sqrt(d)): integers, embeddings and elliptic traces.

An element of PSL2 of the ring of integers O_k fixes a point of the product
of upper half planes exactly when it is elliptic in both real embeddings,
i.e. when its trace t satisfies sigma_i(t)^2 - 4 < 0 for i = 1, 2.  Such a
trace is an algebraic integer of the field, which makes the set of possible
traces finite and exactly enumerable:

* writing t = u + v*omega on the integral basis (1, omega), the difference
  of the two embeddings of t is v*(omega - omega'), so
  (sigma1(t) - sigma2(t))^2 < 16 bounds the omega coefficient v
  (v^2*d < 4 when omega = sqrt(d), v^2*d < 16 when omega = (1+sqrt(d))/2);
* the sum of the embeddings is the rational trace 2a, and
  |sigma1(t) + sigma2(t)| < 4 then bounds the rational coordinate u.

Both bounds are evaluated with integer arithmetic only (loop limits come
from exact inequalities such as v^2*d < 4, never from a floating square
root), and every candidate in the resulting finite box is filtered through
the exact ellipticity test.

The trace t of an elliptic element of finite PSL2 order n equals
2*cos(j*pi/n) for some j coprime to n.  These values are recognised by
comparing the minimal polynomial of t with the minimal polynomials of
2*cos(2*pi/m), which are generated from cyclotomic polynomials at import
time (fold the palindromic Phi_m via x = z + 1/z), so the search bound on
n is configurable rather than baked in.

Exact comparison of a + b*sqrt(d) with 0 is done by sign analysis and a
single squaring step in :meth:`QuadElem.sign`; that method is the one
place in the package where an irrational quantity is compared with a
rational one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "OmegaKind",
    "FieldSpec",
    "QuadElem",
    "TraceCandidate",
    "NotFiniteOrderError",
    "is_square_free",
    "is_algebraic_integer",
    "embed",
    "is_elliptic_trace",
    "elliptic_trace_candidates",
    "order_from_trace",
    "allowed_orders",
    "cos_angle_minpoly",
    "trace_minpoly",
    "DEFAULT_MAX_ORDER",
]

DEFAULT_MAX_ORDER = 30


class NotFiniteOrderError(Exception):
    """An elliptic trace that is not 2*cos(j*pi/n) for any n up to the bound."""


class OmegaKind(Enum):
    """Shape of the second integral basis element of Q(sqrt(d))."""

    SQRT_D = "sqrt(d)"                      # d = 2, 3 mod 4
    HALF_ONE_PLUS_SQRT_D = "(1+sqrt(d))/2"  # d = 1 mod 4


def is_square_free(n: int) -> bool:
    """True if no square of a prime divides n (trial factorization)."""
    if n < 1:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        while n % f == 0:
            n //= f
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The real quadratic field Q(sqrt(d)) for a square-free d >= 2."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if not is_square_free(self.d):
            raise ValueError(f"d must be square-free, got {self.d}")

    @property
    def omega_kind(self) -> OmegaKind:
        if self.d % 4 == 1:
            return OmegaKind.HALF_ONE_PLUS_SQRT_D
        return OmegaKind.SQRT_D

    def omega(self) -> "QuadElem":
        """Second element of the integral basis (1, omega) of O_k."""
        if self.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D:
            return QuadElem(Fraction(1, 2), Fraction(1, 2), self)
        return QuadElem(Fraction(0), Fraction(1), self)

    def element(self, a, b=0) -> "QuadElem":
        """The element a + b*sqrt(d) with rational a, b."""
        return QuadElem(Fraction(a), Fraction(b), self)

    def from_basis(self, u: int, v: int) -> "QuadElem":
        """The algebraic integer u + v*omega."""
        if self.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D:
            return QuadElem(Fraction(2 * u + v, 2), Fraction(v, 2), self)
        return QuadElem(Fraction(u), Fraction(v), self)

    def omega_str(self) -> str:
        if self.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D:
            return f"(1+sqrt({self.d}))/2"
        return f"sqrt({self.d})"


@dataclass(frozen=True)
class QuadElem:
    """The value a + b*sqrt(d), with exact rational components a and b."""

    a: Fraction
    b: Fraction
    field: FieldSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def _check_same_field(self, other: "QuadElem") -> None:
        if self.field != other.field:
            raise ValueError("operands lie in different quadratic fields")

    def __add__(self, other: "QuadElem") -> "QuadElem":
        self._check_same_field(other)
        return QuadElem(self.a + other.a, self.b + other.b, self.field)

    def __sub__(self, other: "QuadElem") -> "QuadElem":
        self._check_same_field(other)
        return QuadElem(self.a - other.a, self.b - other.b, self.field)

    def __mul__(self, other: "QuadElem") -> "QuadElem":
        self._check_same_field(other)
        d = self.field.d
        return QuadElem(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            self.field,
        )

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.field)

    def conjugate(self) -> "QuadElem":
        """Image under the second embedding: a + b*sqrt(d) -> a - b*sqrt(d)."""
        return QuadElem(self.a, -self.b, self.field)

    def trace(self) -> Fraction:
        """sigma1(x) + sigma2(x) = 2a, always rational."""
        return 2 * self.a

    def norm(self) -> Fraction:
        """sigma1(x) * sigma2(x) = a^2 - d*b^2, always rational."""
        return self.a * self.a - self.field.d * self.b * self.b

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d): -1, 0 or 1.

        Case analysis on the signs of a and b; only in the mixed-sign case
        are both sides squared, which is valid because their signs are then
        already known.  This is the single point where an irrational value
        is compared against a rational bound.
        """
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs = a * a
        rhs = b * b * self.field.d
        # lhs == rhs would force d to be a rational square; impossible here.
        assert lhs != rhs
        if lhs > rhs:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __lt__(self, other: "QuadElem") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "QuadElem") -> bool:
        return (self - other).sign() <= 0

    def approx(self) -> float:
        """Floating approximation, for display only (never used in decisions)."""
        return float(self.a) + float(self.b) * math.sqrt(self.field.d)

    def __str__(self) -> str:
        d = self.field.d
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({d})"
        if abs(self.b) != 1:
            root = f"{abs(self.b)}*{root}"
        if self.a == 0:
            return root if self.b > 0 else f"-{root}"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {root}"


# ---------------------------------------------------------------------------
# Ring of integers and embeddings
# ---------------------------------------------------------------------------

def is_algebraic_integer(x: QuadElem) -> bool:
    """Membership of x in Z + Z*omega, the ring of integers of the field.

    Equivalent to the trace 2a and the norm a^2 - d*b^2 both being rational
    integers; the test suite cross-checks this equivalence.
    """
    if x.field.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D:
        # u + v*omega has a = u + v/2, b = v/2: need 2b and a - b integral.
        return (2 * x.b).denominator == 1 and (x.a - x.b).denominator == 1
    return x.a.denominator == 1 and x.b.denominator == 1


def embed(x: QuadElem, i: int) -> QuadElem:
    """The image of x under the i-th real embedding (i = 1 or 2).

    sigma1 is the identity on components and sigma2 negates b.  Decimal
    renderings of either image come from :meth:`QuadElem.approx`, which is
    explicitly approximate.
    """
    if i == 1:
        return x
    if i == 2:
        return x.conjugate()
    raise ValueError(f"embedding index must be 1 or 2, got {i}")


def _abs_less_than_2(x: QuadElem) -> bool:
    two = x.field.element(2)
    return -two < x < two


def is_elliptic_trace(t: QuadElem) -> bool:
    """True if both embeddings of t lie strictly inside (-2, 2).

    The input must be an algebraic integer of its field; anything else is a
    precondition violation and raises ValueError.
    """
    if not is_algebraic_integer(t):
        raise ValueError(f"{t} is not an algebraic integer of Q(sqrt({t.field.d}))")
    return _abs_less_than_2(t) and _abs_less_than_2(t.conjugate())


# ---------------------------------------------------------------------------
# Minimal polynomials of 2*cos(2*pi/m), generated from cyclotomic polynomials
# ---------------------------------------------------------------------------
# Polynomials are tuples of coefficients in ascending degree.

def _poly_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return out


def _poly_divexact(f, g):
    """Exact quotient of integer polynomials; remainder must vanish."""
    f = list(f)
    q = [0] * (len(f) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        coef = f[k + len(g) - 1]
        assert coef % g[-1] == 0, "division is not exact"
        q[k] = coef // g[-1]
        for j, gj in enumerate(g):
            f[k + j] -= q[k] * gj
    assert not any(f), "division left a remainder"
    return q


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> tuple:
    """The m-th cyclotomic polynomial over Z, ascending coefficients."""
    if m < 1:
        raise ValueError("m must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for e in range(1, m):
        if m % e == 0:
            poly = _poly_divexact(poly, cyclotomic(e))
    return tuple(poly)


@lru_cache(maxsize=None)
def cos_angle_minpoly(m: int) -> tuple:
    """Minimal polynomial of 2*cos(2*pi/m) over Q, monic with integer
    coefficients in ascending degree.

    For m >= 3, Phi_m is palindromic of even degree 2k and
    Phi_m(z) / z^k = psi(z + 1/z) for a monic integer psi of degree k;
    psi is recovered with the recursion q_0 = 2, q_1 = x,
    q_j = x*q_{j-1} - q_{j-2} for z^j + z^{-j}.
    """
    if m == 1:
        return (-2, 1)  # x - 2
    if m == 2:
        return (2, 1)   # x + 2
    c = cyclotomic(m)
    k = (len(c) - 1) // 2
    acc = [c[k]]
    q_prev, q_cur = [2], [0, 1]
    for j in range(1, k + 1):
        term = [c[k + j] * t for t in q_cur]
        if len(acc) < len(term):
            acc += [0] * (len(term) - len(acc))
        for idx, t in enumerate(term):
            acc[idx] += t
        shifted = [0] + q_cur  # x * q_j
        nxt = [s - (q_prev[idx] if idx < len(q_prev) else 0) for idx, s in enumerate(shifted)]
        q_prev, q_cur = q_cur, nxt
    return tuple(acc)


def trace_minpoly(t: QuadElem) -> tuple:
    """Monic minimal polynomial of t over Q, ascending coefficients."""
    if t.b == 0:
        return (-t.a, Fraction(1))
    return (t.norm(), -t.trace(), Fraction(1))


# ---------------------------------------------------------------------------
# Elliptic trace census
# ---------------------------------------------------------------------------

def order_from_trace(t: QuadElem, max_order: int = DEFAULT_MAX_ORDER) -> int:
    """Order in PSL2 of an elliptic element with trace t.

    The element has order n exactly when t = 2*cos(j*pi/n) with gcd(j, n)=1.
    For odd j this means t is a root of the minimal polynomial of
    2*cos(2*pi/2n); for even j (possible only when n is odd) a root of the
    one for 2*cos(2*pi/n).  Raises :class:`NotFiniteOrderError` when no
    n <= max_order matches, and ValueError when t is not an elliptic
    algebraic-integer trace.
    """
    if not is_elliptic_trace(t):
        raise ValueError(f"{t} is not an elliptic trace")
    p = trace_minpoly(t)
    for n in range(2, max_order + 1):
        if p == cos_angle_minpoly(2 * n):
            return n
        if n % 2 == 1 and p == cos_angle_minpoly(n):
            return n
    raise NotFiniteOrderError(f"{t} matches no 2*cos(j*pi/n) with n <= {max_order}")


@dataclass(frozen=True)
class TraceCandidate:
    """An elliptic trace together with the PSL2 order it corresponds to."""

    trace: QuadElem
    psl_order: int

    def __post_init__(self) -> None:
        if not is_elliptic_trace(self.trace):
            raise ValueError("trace candidate must have both embeddings in (-2, 2)")
        if self.psl_order < 2:
            raise ValueError("PSL2 order of an elliptic element is at least 2")


def elliptic_trace_candidates(
    field: FieldSpec, max_order: int = DEFAULT_MAX_ORDER
) -> tuple[TraceCandidate, ...]:
    """The complete finite set of elliptic algebraic-integer traces.

    Enumerates t = u + v*omega over the exact integer box described in the
    module docstring, keeps those with both embeddings strictly inside
    (-2, 2), and pairs each with its order.  Every elliptic trace in a real
    quadratic field is a 2*cos(j*pi/n) value; if one ever were not,
    :func:`order_from_trace` would raise rather than silently drop it.
    Candidates are returned sorted by (a, b).
    """
    d = field.d
    found = []
    if field.omega_kind is OmegaKind.SQRT_D:
        # (sigma1 - sigma2)^2 = 4*v^2*d < 16 and |2u| < 4.
        vmax = 0
        while (vmax + 1) ** 2 * d < 4:
            vmax += 1
        u_range = range(-1, 2)
        v_range = range(-vmax, vmax + 1)
        box = ((u, v) for v in v_range for u in u_range)
    else:
        # t = (2u+v)/2 + (v/2)*sqrt(d): v^2*d < 16 and -4 < 2u+v < 4.
        vmax = 0
        while (vmax + 1) ** 2 * d < 16:
            vmax += 1
        def half_box():
            for v in range(-vmax, vmax + 1):
                u_min = (-4 - v) // 2 + 1
                u_max = -((v - 4) // 2) - 1
                for u in range(u_min, u_max + 1):
                    yield (u, v)
        box = half_box()
    for u, v in box:
        t = field.from_basis(u, v)
        if is_elliptic_trace(t):
            found.append(TraceCandidate(t, order_from_trace(t, max_order)))
    found.sort(key=lambda c: (c.trace.a, c.trace.b))
    return tuple(found)


def allowed_orders(field: FieldSpec, max_order: int = DEFAULT_MAX_ORDER) -> tuple[int, ...]:
    """Sorted set of finite element orders occurring in PSL2 of O_k.

    Always contains 2 and 3 (traces 0 and +-1 are elliptic integers in
    every real quadratic field); for quadratic fields the result is a
    subset of {2, 3, 4, 5, 6}.
    """
    return tuple(sorted({c.psl_order for c in elliptic_trace_candidates(field, max_order)}))
