"""Rank tables for K_q(Z[Z_n]) and Whitehead data of finite cyclic groups.

The rational rank of K_q(Z[M]) for M cyclic of order n:

    r(M)                                    q > 2, q = 1 mod 4
    c(M)                                    q > 2, q = 3 mod 4
    r(M) - q(M)                             q = 1
    1                                       q = 0
    1 - q(M) + sum_{p | n} (k_p - r_p)      q = -1
    0                                       otherwise

together with the rank of H_q(BM; K(Z)), which for finite M is the rank of
K_q(Z): 1 at q = 0 and at q = 1 mod 4, q > 2, and 0 otherwise.

Torsion of the K-groups is never computed here; where a Whitehead group has
an undetermined torsion part it is carried symbolically in the returned
:class:`~hilbertmod.abgroups.AbGroupExpr` (tokens ``SK1(Z_n)``,
``Wh0(Z_n)``, ``K-1tors(Z_n)``) so downstream direct sums remain honest.
The only torsion facts baked in are the classical small ones: Wh_1 of
Z_n vanishes for n <= 6, and the finiteness obstruction group Wh_0
vanishes for n <= 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .abgroups import AbGroupExpr
from .cyclicreps import c_count, kp_count, prime_divisors, q_count, r_count, rp_count

__all__ = [
    "RankCase",
    "RankValue",
    "rank_case",
    "rank_K_cyclic",
    "rank_H_BM",
    "wh_cyclic",
    "sk1_token",
    "wh0_token",
    "k_minus1_torsion_token",
    "whq_token",
]


class RankCase(Enum):
    Q1_MOD4 = "q>2, q=1 mod 4"
    Q3_MOD4 = "q>2, q=3 mod 4"
    Q_IS_1 = "q=1"
    Q_IS_0 = "q=0"
    Q_IS_MINUS_1 = "q=-1"
    ZERO = "otherwise"


@dataclass(frozen=True)
class RankValue:
    value: int
    case_label: RankCase


def rank_case(q: int) -> RankCase:
    """Which row of the rank table applies to homological degree q."""
    if q > 2 and q % 4 == 1:
        return RankCase.Q1_MOD4
    if q > 2 and q % 4 == 3:
        return RankCase.Q3_MOD4
    if q == 1:
        return RankCase.Q_IS_1
    if q == 0:
        return RankCase.Q_IS_0
    if q == -1:
        return RankCase.Q_IS_MINUS_1
    return RankCase.ZERO


def rank_K_cyclic(n: int, q: int) -> RankValue:
    """Rational rank of K_q(Z[Z_n])."""
    if n < 1:
        raise ValueError(f"group order must be >= 1, got {n}")
    case = rank_case(q)
    if case is RankCase.Q1_MOD4:
        value = r_count(n)
    elif case is RankCase.Q3_MOD4:
        value = c_count(n)
    elif case is RankCase.Q_IS_1:
        value = r_count(n) - q_count(n)
    elif case is RankCase.Q_IS_0:
        value = 1
    elif case is RankCase.Q_IS_MINUS_1:
        value = 1 - q_count(n) + sum(
            kp_count(n, p) - rp_count(n, p) for p in prime_divisors(n)
        )
    else:
        value = 0
    return RankValue(value=value, case_label=case)


def rank_H_BM(n: int, q: int) -> int:
    """Rank of H_q(BM; K(Z)) for M finite cyclic of order n.

    Rationally only H_0(BM; Q) survives, so this is the rank of K_q(Z):
    1 at q = 0 and at q = 1 mod 4 with q > 2, else 0.
    """
    if n < 1:
        raise ValueError(f"group order must be >= 1, got {n}")
    return 1 if q == 0 or (q > 2 and q % 4 == 1) else 0


def sk1_token(n: int) -> str:
    return f"SK1(Z_{n})"


def wh0_token(n: int) -> str:
    return f"Wh0(Z_{n})"


def k_minus1_torsion_token(n: int) -> str:
    return f"K-1tors(Z_{n})"


def whq_token(n: int, q: int) -> str:
    return f"Wh{q}(Z_{n})"


def wh_cyclic(n: int, q: int) -> AbGroupExpr:
    """Whitehead group Wh_q(Z_n) as a structured expression.

    q = 1: free rank r(n) - q(n); the torsion part SK1 vanishes for
    n <= 6 and is kept symbolic beyond that.  q = 0: zero for n <= 4,
    otherwise the symbolic finiteness obstruction summand.  q = -1: free
    part of K_{-1}(Z[Z_n]) plus a symbolic 2-torsion summand.  q < -1:
    zero.  For q >= 2 nothing integral is pinned down and the whole group
    stays one symbolic token.
    """
    if n < 1:
        raise ValueError(f"group order must be >= 1, got {n}")
    if n == 1:
        return AbGroupExpr.zero()
    if q >= 2:
        return AbGroupExpr.token(whq_token(n, q))
    if q == 1:
        free = r_count(n) - q_count(n)
        if n <= 6:
            return AbGroupExpr.free(free)
        return AbGroupExpr(free_rank=free, symbolic=((sk1_token(n), 1),))
    if q == 0:
        if n <= 4:
            return AbGroupExpr.zero()
        return AbGroupExpr.token(wh0_token(n))
    if q == -1:
        free = rank_K_cyclic(n, -1).value
        return AbGroupExpr(free_rank=free, symbolic=((k_minus1_torsion_token(n), 1),))
    return AbGroupExpr.zero()
