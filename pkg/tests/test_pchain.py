"""Chain enumeration and the symbolic first page over orbit posets."""

import random
from collections import Counter

import pytest

from hilbertmod.assembler import ClassCounts, GroupData, Mode, rank_diff
from hilbertmod.pchain import (
    CoeffToken,
    E1Page,
    NodeKind,
    NodeTag,
    OrbitPoset,
    PropertyMViolationError,
    TokenKind,
    build_E1,
    enumerate_pchains,
    psl_poset,
    rank_E1_column,
    sl_poset,
)

from oracles import naive_pchains, permutation_pchains

D5_COUNTS = ClassCounts.parse("2:2,3:2,5:2")


# ---------------------------------------------------------------------------
# Poset construction
# ---------------------------------------------------------------------------

def test_transitive_closure_and_validation():
    poset = OrbitPoset("abc", [("a", "b"), ("b", "c")])
    assert poset.lt("a", "c")
    with pytest.raises(ValueError):
        OrbitPoset("ab", [("a", "a")])
    with pytest.raises(ValueError):
        OrbitPoset("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        OrbitPoset("aa", [])


# ---------------------------------------------------------------------------
# Chain censuses
# ---------------------------------------------------------------------------

def test_psl_census():
    for m in (0, 1, 3, 6):
        poset = psl_poset(m)
        counts = [len(enumerate_pchains(poset, p)) for p in range(4)]
        assert counts == [m + 1, m, 0, 0], m


def test_sl_census():
    for m in (0, 1, 3, 6):
        poset = sl_poset(m)
        counts = [len(enumerate_pchains(poset, p)) for p in range(5)]
        assert counts == [m + 2, 2 * m + 1, m, 0, 0], m


def test_empty_poset():
    empty = OrbitPoset((), [])
    assert enumerate_pchains(empty, 0) == []
    with pytest.raises(ValueError):
        enumerate_pchains(empty, -1)


def test_deterministic_lexicographic_order():
    poset = psl_poset(3)
    once = [c.nodes for c in enumerate_pchains(poset, 0)]
    again = [c.nodes for c in enumerate_pchains(poset, 0)]
    assert once == again == [("G/1",), ("G/M1",), ("G/M2",), ("G/M3",)]
    assert [c.nodes for c in enumerate_pchains(poset, 1)] == [
        ("G/1", "G/M1"), ("G/1", "G/M2"), ("G/1", "G/M3")
    ]


def test_chains_are_increasing():
    poset = sl_poset(4)
    for p in range(3):
        for chain in enumerate_pchains(poset, p):
            for a, b in zip(chain.nodes, chain.nodes[1:]):
                assert poset.lt(a, b)


def _random_poset(rng):
    n = rng.randint(0, 8)
    nodes = [f"v{i}" for i in range(n)]
    # edges only from lower to higher index keeps the relation acyclic
    less = [
        (nodes[i], nodes[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.4
    ]
    return OrbitPoset(nodes, less)


def test_against_naive_enumeration_on_random_posets():
    rng = random.Random(90210)
    for _ in range(500):
        poset = _random_poset(rng)
        for p in range(len(poset) + 1):
            got = sorted(c.nodes for c in enumerate_pchains(poset, p))
            assert got == naive_pchains(poset, p), poset.nodes


def test_against_permutation_enumeration_on_small_posets():
    rng = random.Random(60601)
    for _ in range(40):
        poset = _random_poset(rng)
        if len(poset) > 6:
            continue
        for p in range(len(poset)):
            got = sorted(c.nodes for c in enumerate_pchains(poset, p))
            assert got == permutation_pchains(poset, p)


# ---------------------------------------------------------------------------
# First pages
# ---------------------------------------------------------------------------

def _token_counts(page, p):
    return {(t.kind, t.order): mult for t, mult in page.column(p).items()}


def test_absolute_psl_page():
    page = build_E1(psl_poset(D5_COUNTS), relative_to_trivial=False,
                    class_counts=D5_COUNTS)
    assert _token_counts(page, 0) == {
        (TokenKind.H_BG, None): 1,
        (TokenKind.K_GROUP_RING, 2): 2,
        (TokenKind.K_GROUP_RING, 3): 2,
        (TokenKind.K_GROUP_RING, 5): 2,
    }
    assert _token_counts(page, 1) == {
        (TokenKind.H_BM, 2): 2,
        (TokenKind.H_BM, 3): 2,
        (TokenKind.H_BM, 5): 2,
    }
    assert page.column(2) == Counter()
    assert page.max_column() == 1
    assert page.d1_rationally_injective


def test_relative_psl_page_collapses_to_one_column():
    page = build_E1(psl_poset(D5_COUNTS), relative_to_trivial=True,
                    class_counts=D5_COUNTS)
    assert _token_counts(page, 0) == {
        (TokenKind.WHITEHEAD, 2): 2,
        (TokenKind.WHITEHEAD, 3): 2,
        (TokenKind.WHITEHEAD, 5): 2,
    }
    assert page.max_column() == 0


def test_relative_sl_page_equals_absolute_psl_page():
    rel = build_E1(sl_poset(D5_COUNTS), relative_to_trivial=True,
                   class_counts=D5_COUNTS)
    absolute = build_E1(psl_poset(D5_COUNTS), relative_to_trivial=False,
                        class_counts=D5_COUNTS)
    assert rel.columns == absolute.columns
    # in particular no 2-chain contributions remain
    assert rel.column(2) == Counter()


def test_build_E1_guards():
    tagged = psl_poset(D5_COUNTS)
    with pytest.raises(ValueError):
        build_E1(tagged, False, class_counts=ClassCounts.parse("2:1"))
    untagged = OrbitPoset(["a", "b"], [("a", "b")])
    with pytest.raises(ValueError):
        build_E1(untagged, False)
    with pytest.raises(ValueError):
        build_E1(sl_poset(D5_COUNTS), relative_to_trivial=False,
                 class_counts=D5_COUNTS)


def test_property_m_violation():
    # a maximal node strictly below another maximal node
    nodes = ["G/1", "G/M1", "G/M2"]
    less = [("G/1", "G/M1"), ("G/M1", "G/M2")]
    tags = {
        "G/1": NodeTag(NodeKind.TRIVIAL),
        "G/M1": NodeTag(NodeKind.MAXIMAL, 2),
        "G/M2": NodeTag(NodeKind.MAXIMAL, 3),
    }
    with pytest.raises(PropertyMViolationError):
        build_E1(OrbitPoset(nodes, less, tags), relative_to_trivial=False)


# ---------------------------------------------------------------------------
# Column ranks
# ---------------------------------------------------------------------------

def test_column_ranks_d5():
    page = build_E1(psl_poset(D5_COUNTS), relative_to_trivial=False)
    # q = 5: the K-tokens contribute 2r(2)+2r(3)+2r(5) = 4+4+6 = 14 and the
    # homology column carries six rank-one classes.
    assert rank_E1_column(page, 0, 5) == 14
    assert rank_E1_column(page, 1, 5) == 6
    assert rank_E1_column(page, 0, 5) - rank_E1_column(page, 1, 5) == 8
    assert rank_E1_column(page, 1, 0) == 6
    for q in (2, -1, 4):
        assert rank_E1_column(page, 0, q) == 0
        assert rank_E1_column(page, 1, q) == 0
    # empty columns have rank zero
    assert rank_E1_column(page, 3, 5) == 0


def test_column_subtraction_reproduces_rank_diff():
    rng = random.Random(5551212)
    for _ in range(60):
        orders = sorted(rng.sample([2, 3, 4, 5, 6], rng.randint(1, 5)))
        counts = ClassCounts(tuple((n, rng.randint(1, 4)) for n in orders))
        g = GroupData(source="random", class_counts=counts, mode=Mode.PSL)
        page = build_E1(psl_poset(counts), relative_to_trivial=False,
                        class_counts=counts)
        for q in range(-3, 22):
            delta = rank_E1_column(page, 0, q) - rank_E1_column(page, 1, q)
            assert delta == rank_diff(g, q), (counts, q)


def test_relative_page_ranks_match_whitehead_free_rank():
    from hilbertmod.assembler import whitehead_psl

    g = GroupData(source="generic", class_counts=D5_COUNTS, mode=Mode.PSL)
    page = build_E1(psl_poset(D5_COUNTS), relative_to_trivial=True)
    assert rank_E1_column(page, 0, 1) == whitehead_psl(g, 1).free_rank == 2


def test_rank_column_requires_orders():
    page = E1Page()
    page.add(0, CoeffToken(TokenKind.K_GROUP_RING, None))
    with pytest.raises(ValueError):
        rank_E1_column(page, 0, 1)
