"""Column posets: interval enumeration, chain order, descents, multichains."""

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcirc.oracle import enumerate_syt
from schurcirc.poset import (
    Interval,
    column_leq,
    column_rank,
    compute_q_star,
    enumerate_chains,
    enumerate_max_chains,
    enumerate_multichains,
    full_interval,
    is_smallest_containing,
    multichain_gf_eval,
    poset_elements,
)

# Maximal chains of the height-2 poset over {1..5}, in order, with their
# descent columns.  This exact table is what the five-term Schur expansion
# for two-row shapes over five variables reads off.
CHAIN_TABLE = [
    (((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)), ()),
    (((1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)), ((2, 5),)),
    (((1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (3, 5), (4, 5)), ((1, 4),)),
    (((1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 5)), ((1, 4), (2, 5))),
    (((1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)), ((1, 5),)),
]


def all_intervals(h, k):
    elems = list(poset_elements(h, k))
    for bot, top in itertools.product(elems, elems):
        if column_leq(bot, top):
            yield Interval(h, k, bot, top)


def test_poset_element_counts():
    for k in range(1, 7):
        for h in range(1, k + 1):
            elems = list(poset_elements(h, k))
            assert len(elems) == math.comb(k, h)
            assert elems == sorted(elems)


def test_poset_elements_validates():
    with pytest.raises(ValueError):
        list(poset_elements(3, 2))
    with pytest.raises(ValueError):
        list(poset_elements(0, 4))


def test_column_rank():
    assert column_rank((1, 2, 3)) == 0
    assert column_rank((4, 5, 6)) == 9
    assert column_rank((2, 4)) == 3


def test_full_interval_bounds():
    iv = full_interval(2, 5)
    assert iv.bottom == (1, 2)
    assert iv.top == (4, 5)
    assert len(list(iv.elements())) == 10


def test_interval_membership_and_order():
    iv = Interval(2, 5, (1, 3), (3, 5))
    assert (2, 4) in iv
    assert (1, 3) in iv
    assert (1, 2) not in iv
    assert (2, 2) not in iv
    elems = list(iv.elements())
    assert elems == sorted(elems)
    assert all(column_leq(iv.bottom, e) and column_leq(e, iv.top) for e in elems)


def test_interval_rejects_bad_bounds():
    with pytest.raises(ValueError):
        Interval(2, 5, (3, 4), (2, 5))  # bottom not below top
    with pytest.raises(ValueError):
        Interval(2, 5, (2, 2), (3, 5))  # not strictly increasing
    with pytest.raises(ValueError):
        Interval(2, 5, (1, 2), (4, 6))  # entry beyond k


def test_chain_table_frozen():
    iv = full_interval(2, 5)
    chains = enumerate_max_chains(iv)
    assert len(chains) == 5
    for chain, (columns, descents) in zip(chains, CHAIN_TABLE):
        assert chain.columns == columns
        q_star = compute_q_star(iv, chain)
        assert q_star.columns(chain) == descents


def test_chain_steps_record_raised_coordinate():
    iv = full_interval(2, 4)
    for chain in enumerate_max_chains(iv):
        for t, step in enumerate(chain.steps):
            before, after = chain.columns[t], chain.columns[t + 1]
            assert after[step] == before[step] + 1
            assert all(after[i] == before[i] for i in range(2) if i != step)


def test_max_chain_counts_match_standard_tableaux():
    for k in range(1, 7):
        for h in range(1, min(3, k) + 1):
            chains = enumerate_max_chains(full_interval(h, k))
            rectangle = (k - h,) * h
            syt = sum(1 for _ in enumerate_syt(rectangle))
            assert len(chains) == syt, (h, k)
            assert all(len(q) == h * (k - h) + 1 for q in chains)
            assert len(chains) <= h ** (h * (k - h))


def brute_force_q_star(iv, chains, index):
    """Descents straight from the definition: columns whose removal leaves
    a subchain of some earlier maximal chain."""
    chain = chains[index]
    found = []
    for j, col in enumerate(chain.columns):
        rest = set(chain.columns) - {col}
        if any(rest <= set(q.columns) for q in chains[:index]):
            found.append(j)
    return tuple(found)


def test_q_star_matches_definition():
    for k in range(2, 6):
        for h in range(1, min(3, k) + 1):
            for iv in all_intervals(h, k):
                chains = enumerate_max_chains(iv)
                for i, chain in enumerate(chains):
                    expected = brute_force_q_star(iv, chains, i)
                    assert compute_q_star(iv, chain).indices == expected, (iv, i)


def test_q_star_never_contains_endpoints():
    iv = full_interval(3, 6)
    for chain in enumerate_max_chains(iv):
        indices = compute_q_star(iv, chain).indices
        assert all(0 < j < len(chain) - 1 for j in indices)


def test_smallest_containing():
    iv = full_interval(2, 5)
    chains = enumerate_max_chains(iv)
    # every chain is the smallest one containing its own descent set
    for chain in chains:
        q_star = compute_q_star(iv, chain)
        assert is_smallest_containing(iv, chain, q_star.columns(chain))
    # the first chain contains the empty subchain; later ones never do
    assert is_smallest_containing(iv, chains[0], ())
    assert not is_smallest_containing(iv, chains[1], ())


def test_enumerate_chains_small():
    # a totally ordered interval: chains are exactly the subsets
    iv = full_interval(1, 3)
    chains = enumerate_chains(iv)
    assert len(chains) == 8
    assert () in chains
    assert len(set(chains)) == len(chains)
    for c in chains:
        assert all(column_leq(a, b) for a, b in zip(c, c[1:]))


def test_enumerate_multichains_counts():
    # multichains of size m in a totally ordered k-element poset
    for k, m in [(3, 2), (4, 3), (2, 5)]:
        iv = full_interval(1, k)
        count = sum(1 for _ in enumerate_multichains(iv, m))
        assert count == math.comb(k + m - 1, m)


def test_multichains_are_weakly_increasing():
    iv = full_interval(2, 4)
    for mc in enumerate_multichains(iv, 3):
        assert all(column_leq(a, b) for a, b in zip(mc, mc[1:]))


def test_multichain_gf_validates():
    iv = full_interval(1, 3)
    with pytest.raises(ValueError):
        multichain_gf_eval(iv, 2, {(1,): 1})  # missing weights
    with pytest.raises(ValueError):
        multichain_gf_eval(iv, -1, {(v,): 1 for v in (1, 2, 3)})
    with pytest.raises(ValueError):
        list(enumerate_multichains(iv, -2))


def test_multichain_gf_matches_brute_force():
    rng = random.Random(17)
    sample = [
        full_interval(2, 4),
        full_interval(2, 5),
        Interval(2, 5, (1, 3), (3, 5)),
        Interval(3, 5, (1, 2, 3), (2, 4, 5)),
        full_interval(1, 4),
    ]
    for iv in sample:
        weights = {e: rng.randint(1, 5) for e in iv.elements()}
        for m in range(5):
            brute = 0
            for mc in enumerate_multichains(iv, m):
                term = 1
                for e in mc:
                    term *= weights[e]
                brute += term
            assert multichain_gf_eval(iv, m, weights) == brute, (iv, m)


def test_ordering_is_proper_spot():
    # no chain contains the descent set of any later chain
    for iv in (full_interval(2, 5), full_interval(3, 5)):
        chains = enumerate_max_chains(iv)
        stars = [frozenset(compute_q_star(iv, q).columns(q)) for q in chains]
        for i, chain in enumerate(chains):
            for j in range(i):
                assert not stars[i] <= frozenset(chains[j].columns)


@given(st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=2),
       st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_descents_identify_smallest_chain(k, h, rng):
    elems = list(poset_elements(h, k))
    bot = rng.choice(elems)
    tops = [e for e in elems if column_leq(bot, e)]
    iv = Interval(h, k, bot, rng.choice(tops))
    chains = enumerate_max_chains(iv)
    chain = rng.choice(chains)
    q_star = compute_q_star(iv, chain)
    assert is_smallest_containing(iv, chain, q_star.columns(chain))
