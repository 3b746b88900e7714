from itertools import combinations

import pytest

from fuzzcount.bijection import (
    VectorPair,
    build_chain,
    chain_to_pair,
    check_round_trip,
    count_pairs,
    enumerate_pairs,
    restricted_chains,
)
from fuzzcount.checks import sylow_chain_sets
from fuzzcount.combinatorics import binomial
from fuzzcount.formulas import interleave_count
from fuzzcount.groups import two_prime_groups
from fuzzcount.oracle import Chain, enumerate_chains, restrict_chain, sylow_subgroups

from conftest import Z, lattice_of


def brute_pairs(i, j, s):
    full = set(range(1, s + 1))
    return [
        (a, b)
        for a in combinations(sorted(full), i)
        for b in combinations(sorted(full), j)
        if set(a) | set(b) == full
    ]


def test_enumerate_pairs_examples():
    assert [(p.a, p.b) for p in enumerate_pairs(1, 1, 1)] == [((1,), (1,))]
    assert [(p.a, p.b) for p in enumerate_pairs(1, 1, 2)] == [((1,), (2,)), ((2,), (1,))]
    assert len(enumerate_pairs(2, 1, 2)) == 2
    assert len(enumerate_pairs(2, 1, 3)) == 3
    assert count_pairs(2, 1) == 5 == interleave_count(2, 1)


def test_enumerate_pairs_out_of_range_is_empty():
    assert enumerate_pairs(2, 2, 1) == []
    assert enumerate_pairs(2, 2, 5) == []
    assert enumerate_pairs(0, 1, 1) == []


def test_enumerate_pairs_equals_filtered_subsets():
    for i in range(1, 6):
        for j in range(1, 6):
            for s in range(max(i, j), i + j + 1):
                got = [(p.a, p.b) for p in enumerate_pairs(i, j, s)]
                assert got == sorted(brute_pairs(i, j, s))


def test_pair_counts_closed_form():
    for i in range(1, 7):
        for j in range(1, i + 1):
            for k in range(j + 1):
                assert len(enumerate_pairs(i, j, i + k)) == binomial(i + k, i) * binomial(i, j - k)
            assert count_pairs(i, j) == interleave_count(i, j)


def test_vector_pair_validation():
    with pytest.raises(ValueError):
        VectorPair((1, 3), (2,), 4)  # 4 uncovered
    with pytest.raises(ValueError):
        VectorPair((2, 1), (1, 2), 2)
    with pytest.raises(ValueError):
        VectorPair((1,), (2,), 1)
    assert VectorPair((1, 2), (2,), 2) == VectorPair((1, 2), (2,), 2)


def test_build_chain_examples(z6):
    a, b = sylow_subgroups(z6)
    ca, cb = Chain((a,)), Chain((b,))
    assert build_chain(VectorPair((1,), (1,), 1), ca, cb, z6) == Chain((z6.top,))
    assert build_chain(VectorPair((1,), (2,), 2), ca, cb, z6) == Chain((a, z6.top))
    assert build_chain(VectorPair((2,), (1,), 2), ca, cb, z6) == Chain((b, z6.top))
    with pytest.raises(ValueError):
        build_chain(VectorPair((1, 2), (1,), 2), ca, cb, z6)


def test_chain_to_pair_examples(z6):
    a, _ = sylow_subgroups(z6)
    assert chain_to_pair(Chain((z6.top,)), z6) == VectorPair((1,), (1,), 1)
    assert chain_to_pair(Chain((a, z6.top)), z6) == VectorPair((1,), (2,), 2)
    with pytest.raises(ValueError):
        chain_to_pair(Chain((0, z6.top)), z6)


def test_round_trips_small_groups():
    for spec in two_prime_groups(60):
        lattice = lattice_of(spec)
        for chain in enumerate_chains(lattice):
            if chain.terms[0] != lattice.trivial:
                assert check_round_trip(chain, lattice)


def test_built_chains_distinct_and_restrict_back():
    lattice = lattice_of(Z(2, 1, 1, q=3, q_exps=(2,)))
    chains_a, chains_b = sylow_chain_sets(lattice)
    everything = set()
    for ca in chains_a:
        for cb in chains_b:
            built = restricted_chains((ca, cb), lattice)
            assert len(set(built.values())) == len(built) == interleave_count(len(ca), len(cb))
            for pair, chain in built.items():
                assert restrict_chain(lattice, chain) == (ca, cb)
                assert chain_to_pair(chain, lattice) == pair
            assert everything.isdisjoint(built.values())
            everything.update(built.values())
