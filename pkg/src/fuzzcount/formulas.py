"""Closed-form chain counts and the fuzzy subgroup count for A x B.

Counts are exact Python integers throughout. A :class:`ChainProfile` holds
h_1(G), ..., h_L(G): the number of proper subgroup chains that end at G, start
at a non-trivial subgroup and have exactly i terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import binomial, gaussian_binomial, is_prime
from .groups import GroupSpec

# Conventions for the trivial group {e}.
TRIVIAL_N = 1
TRIVIAL_H = 0


@dataclass(frozen=True)
class ChainProfile:
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = list(self.counts)
        while counts and counts[-1] == 0:
            counts.pop()
        if any(c < 0 for c in counts):
            raise ValueError(f"chain counts must be non-negative: {counts}")
        object.__setattr__(self, "counts", tuple(int(c) for c in counts))

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def h(self, i):
        """h_i, with zero outside 1..len."""
        if 1 <= i <= len(self.counts):
            return self.counts[i - 1]
        return 0

    @property
    def total(self):
        return sum(self.counts)

    def dominates(self, other):
        width = max(len(self), len(other))
        return all(self.h(i) >= other.h(i) for i in range(1, width + 1))


def cyclic_profile(n: int) -> ChainProfile:
    """Profile of Z_{p^n}: h_k = C(n-1, k-1), the same for every prime p."""
    if n < 1:
        raise ValueError("cyclic_profile needs n >= 1; the trivial group has h = 0")
    return ChainProfile(tuple(binomial(n - 1, k - 1) for k in range(1, n + 1)))


def elementary_abelian_profile(n: int, p: int) -> ChainProfile:
    """Profile of Z_p^n.

    h_k sums [n i_{k-1}]_p [i_{k-1} i_{k-2}]_p ... [i_2 i_1]_p over
    1 <= i_1 < ... < i_{k-1} <= n-1. Evaluated as a DP over subgroup ranks:
    ways[k][d] is the weighted number of k-term chains starting at some
    rank >= 1 subspace and ending at a rank-d one.
    """
    if n < 1:
        raise ValueError("elementary_abelian_profile needs n >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    # ways[d]: weighted chains of the current length whose top term has rank d
    ways = [0] + [1] * n
    counts = [ways[n]]
    for _ in range(2, n + 1):
        nxt = [0] * (n + 1)
        for top in range(2, n + 1):
            nxt[top] = sum(ways[d] * gaussian_binomial(top, d, p) for d in range(1, top))
        ways = nxt
        counts.append(ways[n])
    return ChainProfile(tuple(counts))


def interleave_count(i: int, j: int) -> int:
    """h(i, j): chains of G = A x B whose restriction is a fixed (i-term, j-term) pair."""
    if i < 1 or j < 1:
        raise ValueError(f"interleave_count needs i, j >= 1 (got {i}, {j})")
    if i < j:
        i, j = j, i
    return _interleave(i, j)


@lru_cache(maxsize=None)
def _interleave(i, j):
    return sum(binomial(i + k, i) * binomial(i, j - k) for k in range(j + 1))


def count_fuzzy_subgroups(spec: GroupSpec | None, profile_A: ChainProfile, profile_B: ChainProfile) -> int:
    """n(G) for G = A x B, up to the chain equivalence, from the two Sylow profiles.

    ``spec`` may be None when only the profiles are at hand; if given it must
    describe a two-prime group.
    """
    if spec is not None and not spec.two_prime:
        raise ValueError("count_fuzzy_subgroups needs a two-prime group; use single_prime_count")
    if len(profile_A) == 0 or len(profile_B) == 0:
        raise ValueError("both Sylow profiles must be non-empty")
    h = 0
    for i, ha in enumerate(profile_A.counts, start=1):
        if not ha:
            continue
        for j, hb in enumerate(profile_B.counts, start=1):
            h += interleave_count(i, j) * ha * hb
    return 2 * h


def single_prime_count(profile: ChainProfile) -> int:
    """n(G) = 2 h(G) for a non-trivial group."""
    if len(profile) == 0:
        raise ValueError("profile of a non-trivial group expected")
    return 2 * profile.total


def to_weak_equivalence_count(n1: int) -> int:
    """Convert a count under ~ into the count under the coarser relation: 2 n1 - 1."""
    if n1 < 1:
        raise ValueError(f"count must be >= 1 (got {n1})")
    return 2 * n1 - 1


def formula_profile(spec: GroupSpec):
    """Closed-form profile of a single-prime group, or None if no formula applies."""
    if spec.two_prime:
        raise ValueError("formula_profile takes a single-prime group")
    if spec.is_cyclic_p():
        return cyclic_profile(spec.n)
    if spec.is_elementary_p():
        return elementary_abelian_profile(spec.n, spec.p)
    return None
