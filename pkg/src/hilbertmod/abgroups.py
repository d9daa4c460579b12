"""Structured direct sums of abelian groups.

An :class:`AbGroupExpr` is a free rank, a multiset of finite cyclic orders,
and a multiset of symbolic summands with multiplicities.  The symbolic part
carries pieces that are known to exist but are not computed here (for
example torsion of K-groups that the built-in tables do not cover), so
results stay honest instead of silently dropping unknown summands.

Expressions are canonicalized on construction (sorted torsion, merged and
sorted symbolic part), so equality is structural.  No Smith normal form is
applied: Z/6 and Z/2 + Z/3 are distinct expressions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

__all__ = ["AbGroupExpr"]


@dataclass(frozen=True)
class AbGroupExpr:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    symbolic: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        tor = tuple(sorted(int(t) for t in self.torsion))
        if any(t < 2 for t in tor):
            raise ValueError("torsion orders must be >= 2")
        merged: Counter = Counter()
        for token, mult in self.symbolic:
            if mult < 0:
                raise ValueError("symbolic multiplicities must be nonnegative")
            merged[str(token)] += int(mult)
        sym = tuple(sorted((t, m) for t, m in merged.items() if m > 0))
        object.__setattr__(self, "torsion", tor)
        object.__setattr__(self, "symbolic", sym)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "AbGroupExpr":
        return cls()

    @classmethod
    def free(cls, rank: int) -> "AbGroupExpr":
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> "AbGroupExpr":
        return cls(torsion=(order,))

    @classmethod
    def token(cls, name: str, mult: int = 1) -> "AbGroupExpr":
        return cls(symbolic=((name, mult),))

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "AbGroupExpr") -> "AbGroupExpr":
        """Direct sum."""
        return AbGroupExpr(
            self.free_rank + other.free_rank,
            self.torsion + other.torsion,
            self.symbolic + other.symbolic,
        )

    def scaled(self, k: int) -> "AbGroupExpr":
        """Direct sum of k copies of self."""
        if k < 0:
            raise ValueError("multiplicity must be nonnegative")
        return AbGroupExpr(
            self.free_rank * k,
            self.torsion * k,
            tuple((t, m * k) for t, m in self.symbolic),
        )

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion and not self.symbolic

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        """Canonical string such as ``Z^2 + Z/2 + 2*Wh0(Z_5)``."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for order, mult in sorted(Counter(self.torsion).items()):
            parts.append(f"Z/{order}" if mult == 1 else f"{mult}*Z/{order}")
        for token, mult in self.symbolic:
            parts.append(token if mult == 1 else f"{mult}*{token}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {
            "render": self.render(),
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "symbolic": [{"token": t, "multiplicity": m} for t, m in self.symbolic],
        }

    # -- parsing (CLI input such as "Z^2 + Z/2" or "0") ----------------------

    @classmethod
    def parse(cls, text: str) -> "AbGroupExpr":
        text = text.strip()
        if text == "0":
            return cls.zero()
        free = 0
        torsion = []
        for raw in text.split("+"):
            term = raw.strip()
            if not term:
                raise ValueError(f"empty summand in {text!r}")
            mult = 1
            if "*" in term:
                head, _, term = term.partition("*")
                mult = int(head.strip())
                term = term.strip()
                if mult < 1:
                    raise ValueError("summand multiplicity must be >= 1")
            if term == "Z":
                free += mult
            elif term.startswith("Z^"):
                free += mult * int(term[2:])
            elif term.startswith("Z/"):
                torsion.extend([int(term[2:])] * mult)
            else:
                raise ValueError(f"cannot parse abelian group summand {term!r}")
        return cls(free_rank=free, torsion=tuple(torsion))
