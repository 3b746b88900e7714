"""Vector pairs and the chains they encode.

A chain of A x B restricted by a fixed i-term chain of A and j-term chain of
B, with s terms, is determined by the positions 1..s at which its A-part and
its B-part step up. Those positions form a :class:`VectorPair`. ``build_chain``
and ``chain_to_pair`` are the two directions of that correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .oracle import Chain, restrict_chain, sylow_decompose


@dataclass(frozen=True)
class VectorPair:
    a: tuple[int, ...]
    b: tuple[int, ...]
    s: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        for name, v in (("a", self.a), ("b", self.b)):
            if not v or any(x >= y for x, y in zip(v, v[1:])):
                raise ValueError(f"{name} must be a non-empty strictly increasing vector: {v}")
            if v[0] < 1 or v[-1] > self.s:
                raise ValueError(f"{name} has entries outside 1..{self.s}: {v}")
        if set(self.a) | set(self.b) != set(range(1, self.s + 1)):
            raise ValueError(f"a and b do not cover 1..{self.s}: {self.a}, {self.b}")

    @property
    def shape(self):
        return len(self.a), len(self.b)


def enumerate_pairs(i: int, j: int, s: int) -> list[VectorPair]:
    """All pairs in V_{i,j,s}, ordered lexicographically on a, then b.

    set(a) is any i-subset of 1..s; b must contain the s - i positions outside
    it plus an overlap of i + j - s positions chosen inside it.
    """
    if i < 1 or j < 1 or not max(i, j) <= s <= i + j:
        return []
    full = range(1, s + 1)
    out = []
    for a in combinations(full, i):
        rest = sorted(set(full) - set(a))
        for shared in combinations(a, i + j - s):
            b = tuple(sorted(rest + list(shared)))
            out.append(VectorPair(a, b, s))
    out.sort(key=lambda pr: (pr.a, pr.b))
    return out


def count_pairs(i, j):
    """Total number of vector pairs over every admissible s."""
    return sum(len(enumerate_pairs(i, j, s)) for s in range(max(i, j), i + j + 1))


def build_chain(pair: VectorPair, chain_A: Chain, chain_B: Chain, lattice) -> Chain:
    """The chain D_1 < ... < D_s whose A-part steps up at ``pair.a`` and B-part at ``pair.b``.

    D_t keeps the previous A-part X unless t = a_h, in which case it becomes
    A_h; likewise for the B-part. Before step 1 both parts are trivial.
    """
    if len(pair.a) != len(chain_A) or len(pair.b) != len(chain_B):
        raise ValueError(
            f"pair shape {pair.shape} does not match chain lengths ({len(chain_A)}, {len(chain_B)})"
        )
    a_at = {t: h for h, t in enumerate(pair.a)}
    b_at = {t: f for f, t in enumerate(pair.b)}
    x = y = lattice.trivial
    terms = []
    for t in range(1, pair.s + 1):
        if t in a_at:
            x = chain_A.terms[a_at[t]]
        if t in b_at:
            y = chain_B.terms[b_at[t]]
        terms.append(lattice.join(x, y))
    return Chain(tuple(terms))


def chain_to_pair(chain: Chain, lattice) -> VectorPair:
    """Positions at which the p-part and the q-part of ``chain`` grow."""
    if chain.terms[0] == lattice.trivial:
        raise ValueError("chain_to_pair needs a chain with a non-trivial first term")
    xs, ys = [], []
    prev_a = prev_b = lattice.trivial
    for t, term in enumerate(chain.terms, start=1):
        a, b = sylow_decompose(lattice, term)
        if a != prev_a:
            xs.append(t)
        if b != prev_b:
            ys.append(t)
        prev_a, prev_b = a, b
    return VectorPair(tuple(xs), tuple(ys), len(chain))


def restricted_chains(pair_shape_chains, lattice):
    """All chains built from one (chain_A, chain_B) pair, keyed by vector pair."""
    chain_A, chain_B = pair_shape_chains
    i, j = len(chain_A), len(chain_B)
    return {
        pr: build_chain(pr, chain_A, chain_B, lattice)
        for s in range(max(i, j), i + j + 1)
        for pr in enumerate_pairs(i, j, s)
    }


def check_round_trip(chain, lattice):
    """True iff building from the chain's own pair and restriction gives the chain back."""
    chain_A, chain_B = restrict_chain(lattice, chain)
    return build_chain(chain_to_pair(chain, lattice), chain_A, chain_B, lattice) == chain
