"""End-to-end acceptance checks.

Every check is exact (integer or structural equality, zero tolerance) and
prints one PASS/FAIL line so the suite reads as a checklist
(``pytest tests/test_acceptance.py -rA`` shows the lines).

Two entries of the pinned golden data are internally inconsistent, and the
corresponding tests fail by design rather than bending the mathematics to
match them; see the docstrings of criterion 2 and criterion 6 for the
specific arithmetic.  Everything else passes.
"""

import random
import time
from fractions import Fraction

from hilbertmod.abgroups import AbGroupExpr
from hilbertmod.assembler import (
    ClassCounts,
    GroupData,
    Mode,
    group_data_for_field,
    rank_diff,
    rank_diff_from_case_table,
    whitehead_psl,
    whitehead_sl,
)
from hilbertmod.classnumbers import class_number
from hilbertmod.cyclicreps import c_count, kp_count, q_count, r_count, rp_count
from hilbertmod.finitek import rank_K_cyclic
from hilbertmod.pchain import (
    OrbitPoset,
    build_E1,
    enumerate_pchains,
    psl_poset,
    rank_E1_column,
    sl_poset,
)
from hilbertmod.quadfield import FieldSpec, allowed_orders, elliptic_trace_candidates

from oracles import (
    class_number_by_reduction,
    complex_type_orbits,
    kp_formula,
    naive_pchains,
    rational_irred_orbits,
    real_irred_orbits,
    rp_formula,
)

SMALL_PRIMES = [p for p in range(2, 51) if all(p % f for f in range(2, p))]


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"acceptance criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_trace_census():
    """Q(sqrt(5)): exactly {0, +-1, +-(1+sqrt5)/2, +-(1-sqrt5)/2}, orders {2,3,5}."""
    start = time.monotonic()
    field = FieldSpec(5)
    census = {(c.trace.a, c.trace.b) for c in elliptic_trace_candidates(field)}
    half = Fraction(1, 2)
    expected = {
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0)),
        (half, half), (-half, -half),   # +-(1+sqrt5)/2
        (half, -half), (-half, half),   # +-(1-sqrt5)/2
    }
    orders = allowed_orders(field)
    elapsed = time.monotonic() - start
    ok = census == expected and orders == (2, 3, 5) and elapsed < 1.0
    _report(1, ok, f"{len(census)} candidates, orders {orders}, {elapsed:.3f}s")


def test_criterion_2_rank_table():
    """Q(sqrt(5)) rank table, pinned: 14 / 6 / 2 / 0.

    The 6 (q = 3 mod 4, q > 2), the 2 (q = 1) and every 0 row hold.  The
    pinned 14 for q = 1 mod 4, q > 2 is the bare sum
    2r(Z_2) + 2r(Z_3) + 2r(Z_5) = 4 + 4 + 6 without the subtraction of
    m = 6 rank-one homology classes, yet the same pinned table needs that
    subtraction at q = 0 (where it yields its 0 via 6 - 6).  Applied
    uniformly, the subtraction gives 14 - 6 = 8 here, and the dual-path
    identity of criterion 4 independently forces 8.  The inconsistent
    entry stays pinned, so this test documents the discrepancy by failing.
    """
    g = group_data_for_field(FieldSpec(5))

    def pinned(q: int) -> int:
        if q > 2 and q % 4 == 1:
            return 14
        if q > 2 and q % 4 == 3:
            return 6
        if q == 1:
            return 2
        return 0

    mismatches = {}
    for q in range(-6, 22):
        got = rank_diff(g, q)
        if got != pinned(q):
            mismatches[q] = (got, pinned(q))
    _report(2, not mismatches, f"mismatches (got, pinned): {mismatches or 'none'}")


def test_criterion_3_whitehead_values():
    """Wh_1 expressions: Z^2 for PSL, Z^2 + Z/2 for SL, Z/6 + Z/2 generic."""
    psl = whitehead_psl(group_data_for_field(FieldSpec(5), Mode.PSL), 1)
    sl = whitehead_sl(group_data_for_field(FieldSpec(5), Mode.SL), 1)
    generic = whitehead_sl(
        GroupData(
            source="classical modular group",
            class_counts=ClassCounts.parse("2:1,3:1"),
            mode=Mode.SL,
            abelianization=AbGroupExpr.cyclic(6),
        ),
        1,
    )
    ok = (
        psl == AbGroupExpr.free(2)
        and sl == AbGroupExpr(2, (2,), ())
        and generic == AbGroupExpr(0, (2, 6), ())
    )
    _report(3, ok, f"psl={psl}, sl={sl}, generic={generic}")


def test_criterion_4_dual_path_identity():
    """Direct formula = literal case table = first-page column subtraction,
    on 200 randomized class multisets and q in [-3, 21]."""
    start = time.monotonic()
    rng = random.Random(24601)
    bad = 0
    for _ in range(200):
        orders = sorted(rng.sample([2, 3, 4, 5, 6], rng.randint(1, 5)))
        counts = ClassCounts(tuple((n, rng.randint(1, 5)) for n in orders))
        g = GroupData(source="random", class_counts=counts, mode=Mode.PSL)
        page = build_E1(psl_poset(counts), relative_to_trivial=False,
                        class_counts=counts)
        for q in range(-3, 22):
            direct = rank_diff(g, q)
            table = rank_diff_from_case_table(g, q)
            pagewise = rank_E1_column(page, 0, q) - rank_E1_column(page, 1, q)
            if not (direct == table == pagewise):
                bad += 1
    elapsed = time.monotonic() - start
    ok = bad == 0 and elapsed < 5.0
    _report(4, ok, f"{bad} disagreements over 200 multisets, {elapsed:.2f}s")


def test_criterion_5_representation_count_oracles():
    """Closed forms match character-orbit brute force (n <= 500); local
    counts match the independent divisor-sum enumeration (n <= 200,
    p <= 50); k_p = r_p whenever p does not divide n."""
    start = time.monotonic()
    ok = True
    for n in range(1, 501):
        if (r_count(n) != real_irred_orbits(n)
                or c_count(n) != complex_type_orbits(n)
                or q_count(n) != rational_irred_orbits(n)):
            ok = False
            break
    if ok:
        for n in range(1, 201):
            for p in SMALL_PRIMES:
                kp, rp = kp_count(n, p), rp_count(n, p)
                if kp != kp_formula(n, p) or rp != rp_formula(n, p):
                    ok = False
                    break
                if n % p and kp != rp:
                    ok = False
                    break
            if not ok:
                break
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30.0
    _report(5, ok, f"n<=500 global, n<=200 local over {len(SMALL_PRIMES)} primes, {elapsed:.1f}s")


def test_criterion_6_k_minus_one_spot_values():
    """K_{-1} ranks pinned: rank(Z_2) = 0 and rank(Z_4) = 1.

    The Z_2 value holds: 1 - q(2) + (k_2 - r_2) = 1 - 2 + (2 - 1) = 0.
    The pinned Z_4 value disagrees with the very orbit counts pinned next
    to it: q(4) = 3 divisors, k_2(4) = 3 orbits (of {0}, {1,3}, {2}),
    r_2(4) = 1 coset, so 1 - 3 + (3 - 1) = 0, not 1.  The orbit oracle and
    the divisor-sum oracle agree on 0 (and on rank 1 for Z_6, the one
    order in range with a nonzero value).  The inconsistent entry stays
    pinned, so this test documents the discrepancy by failing.
    """
    got2 = rank_K_cyclic(2, -1).value
    got4 = rank_K_cyclic(4, -1).value
    oracle4 = 1 - q_count(4) + (kp_formula(4, 2) - rp_formula(4, 2))
    ok = got2 == 0 and got4 == 1
    _report(6, ok, f"rank(Z_2)={got2} (pinned 0), rank(Z_4)={got4} "
                   f"(pinned 1, orbit oracle {oracle4})")


def test_criterion_7_chain_census():
    """Chain enumeration matches brute force on 500 random posets; the
    projective poset yields (m+1, m, 0) chains and the SL poset m 2-chains."""
    rng = random.Random(1729)
    ok = True
    for _ in range(500):
        n = rng.randint(0, 8)
        nodes = [f"v{i}" for i in range(n)]
        less = [
            (nodes[i], nodes[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.4
        ]
        poset = OrbitPoset(nodes, less)
        for p in range(n + 1):
            if sorted(c.nodes for c in enumerate_pchains(poset, p)) != naive_pchains(poset, p):
                ok = False
    censuses_ok = True
    for m in (1, 4, 6):
        psl_counts = [len(enumerate_pchains(psl_poset(m), p)) for p in (0, 1, 2)]
        if psl_counts != [m + 1, m, 0]:
            censuses_ok = False
        if len(enumerate_pchains(sl_poset(m), 2)) != m:
            censuses_ok = False
    ok = ok and censuses_ok
    _report(7, ok, "500 random posets + projective/SL censuses")


def test_criterion_8_class_numbers():
    """h(-3) = 1, h(-4) = 1, h(-23) = 3, cross-checked by reducing every
    form with coefficients bounded by |D|."""
    start = time.monotonic()
    ok = True
    for D, expected in [(-3, 1), (-4, 1), (-23, 3)]:
        direct = class_number(D)
        brute, _ = class_number_by_reduction(D)
        if not (direct == brute == expected):
            ok = False
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 1.0
    _report(8, ok, f"h(-3), h(-4), h(-23) via both routes, {elapsed:.3f}s")
