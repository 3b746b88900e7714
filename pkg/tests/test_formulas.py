from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzcount.combinatorics import gaussian_binomial
from fuzzcount.formulas import (
    TRIVIAL_H,
    TRIVIAL_N,
    ChainProfile,
    count_fuzzy_subgroups,
    cyclic_profile,
    elementary_abelian_profile,
    interleave_count,
    single_prime_count,
    to_weak_equivalence_count,
)
from fuzzcount.groups import GroupSpec


def brute_interleave(i, j):
    """Count pairs of increasing vectors covering 1..s by filtering all subset pairs."""
    total = 0
    for s in range(1, i + j + 1):
        for a in combinations(range(1, s + 1), i):
            for b in combinations(range(1, s + 1), j):
                if set(a) | set(b) == set(range(1, s + 1)):
                    total += 1
    return total


def tuple_sum_profile(n, p):
    """h_k as the literal sum over index tuples."""
    counts = [1]
    for k in range(2, n + 1):
        total = 0
        for idx in combinations(range(1, n), k - 1):
            chain = list(idx) + [n]
            term = 1
            for lo, hi in zip(chain, chain[1:]):
                term *= gaussian_binomial(hi, lo, p)
            total += term
        counts.append(total)
    return tuple(counts)


@pytest.mark.parametrize("n,expected", [(1, (1,)), (3, (1, 2, 1)), (5, (1, 4, 6, 4, 1))])
def test_cyclic_profile(n, expected):
    assert cyclic_profile(n).counts == expected


def test_cyclic_profile_rejects_zero():
    with pytest.raises(ValueError):
        cyclic_profile(0)


@pytest.mark.parametrize("n,p,expected", [(1, 2, (1,)), (1, 7, (1,)), (2, 2, (1, 3)), (3, 2, (1, 14, 21))])
def test_elementary_profile_examples(n, p, expected):
    assert elementary_abelian_profile(n, p).counts == expected


def test_elementary_profile_matches_tuple_sums():
    for p in (2, 3, 5):
        for n in range(1, 8):
            assert elementary_abelian_profile(n, p).counts == tuple_sum_profile(n, p)


def test_elementary_profile_rejects_bad_input():
    with pytest.raises(ValueError):
        elementary_abelian_profile(0, 2)
    with pytest.raises(ValueError):
        elementary_abelian_profile(2, 6)


@pytest.mark.parametrize("i,j,expected", [(1, 1, 3), (2, 1, 5), (2, 2, 13)])
def test_interleave_examples(i, j, expected):
    assert interleave_count(i, j) == expected


def test_interleave_matches_brute_force_and_is_symmetric():
    for i in range(1, 7):
        for j in range(1, 7):
            assert interleave_count(i, j) == brute_interleave(i, j)
    for i in range(1, 9):
        for j in range(1, 9):
            assert interleave_count(i, j) == interleave_count(j, i)


def test_interleave_rejects_zero():
    with pytest.raises(ValueError):
        interleave_count(0, 1)


@pytest.mark.parametrize(
    "pa,pb,expected",
    [((1,), (1,), 6), ((1, 1), (1,), 16), ((1, 3), (1,), 36)],
)
def test_main_theorem_examples(pa, pb, expected):
    spec = GroupSpec(2, (1,), 3, (1,))
    assert count_fuzzy_subgroups(spec, ChainProfile(pa), ChainProfile(pb)) == expected


def test_main_theorem_rejects_single_prime():
    with pytest.raises(ValueError):
        count_fuzzy_subgroups(GroupSpec(2, (2,)), cyclic_profile(2), cyclic_profile(1))
    with pytest.raises(ValueError):
        count_fuzzy_subgroups(None, ChainProfile(()), cyclic_profile(1))


def test_single_prime_count():
    assert single_prime_count(ChainProfile((1,))) == 2
    assert single_prime_count(elementary_abelian_profile(2, 2)) == 8
    for n in range(1, 17):
        assert single_prime_count(cyclic_profile(n)) == 2**n


def test_weak_equivalence_conversion():
    assert to_weak_equivalence_count(1) == 1
    assert to_weak_equivalence_count(6) == 11
    assert to_weak_equivalence_count(16) == 31
    with pytest.raises(ValueError):
        to_weak_equivalence_count(0)


def test_trivial_group_constants():
    assert (TRIVIAL_N, TRIVIAL_H) == (1, 0)
    assert to_weak_equivalence_count(TRIVIAL_N) == TRIVIAL_N


def test_profile_trims_zeros_and_zero_extends():
    prof = ChainProfile((1, 2, 0, 0))
    assert prof.counts == (1, 2)
    assert prof.h(3) == 0 and prof.h(0) == 0
    with pytest.raises(ValueError):
        ChainProfile((1, -1))


profiles = st.lists(st.integers(0, 50), min_size=1, max_size=6).map(lambda xs: [1] + xs)


@given(profiles, profiles, st.lists(st.integers(0, 5), min_size=7, max_size=7))
def test_main_theorem_monotone_and_even(a, b, bump):
    pa, pb = ChainProfile(tuple(a)), ChainProfile(tuple(b))
    bigger = ChainProfile(tuple(x + d for x, d in zip(a, bump)))
    assert bigger.dominates(pa)
    n = count_fuzzy_subgroups(None, pa, pb)
    assert n % 2 == 0
    assert count_fuzzy_subgroups(None, bigger, pb) >= n


@given(st.integers(1, 6))
def test_families_agree_at_rank_one(m):
    # Z_p x Z_q^m has the same count whether the p-part is read as cyclic or elementary
    assert cyclic_profile(1) == elementary_abelian_profile(1, 5)
    assert count_fuzzy_subgroups(None, cyclic_profile(1), cyclic_profile(m)) == count_fuzzy_subgroups(
        None, elementary_abelian_profile(1, 2), cyclic_profile(m)
    )
