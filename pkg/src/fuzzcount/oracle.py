"""Brute-force subgroup lattices of small abelian groups.

This is the ground truth the closed formulas are checked against, so nothing
here uses subgroup structure theory: subgroups are found by closing sets of
elements under the group law, and chains are counted on the resulting
containment DAG.

Elements are numbered by the mixed-radix rank of their coordinate vector
(first factor most significant), so the identity is element 0. Subgroups are
numbered in canonical order: ascending by (order, sorted member list).
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import product

from .formulas import ChainProfile
from .groups import GroupSpec

DEFAULT_MAX_ORDER = 512
DEFAULT_MAX_CHAINS = 10**6


class OracleBoundError(RuntimeError):
    """Refusal to work on a group or chain set above the configured bound."""


class InvalidMembershipError(ValueError):
    """A membership function with a level slice that is not a subgroup."""


@dataclass(frozen=True)
class Subgroup:
    id: int
    members: tuple[int, ...]
    mask: int = field(repr=False, compare=False)

    @property
    def order(self):
        return len(self.members)


@dataclass(frozen=True)
class Chain:
    """Strictly increasing subgroup ids; the last one is the top of the chain."""

    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("a chain has at least one term")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


@dataclass(frozen=True)
class FuzzyMembership:
    """Ordinal membership levels: level_of[x] = rank of element x, rank 1 highest."""

    level_of: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "level_of", tuple(self.level_of))
        if self.level_of and min(self.level_of) < 1:
            raise ValueError("levels are positive ranks")


def _iter_bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class SubgroupLattice:
    """All subgroups of a finite abelian group with their cover relation."""

    def __init__(self, spec, subgroups, covers, elements, add, element_orders):
        self.group = spec
        self.subgroups = subgroups
        self.covers = covers  # covers[h] = ids of subgroups covering h
        self.elements = elements
        self.add = add
        self.element_orders = element_orders
        self._by_mask = {s.mask: s.id for s in subgroups}
        self._by_set = {frozenset(s.members): s.id for s in subgroups}
        self._up = None
        self._counts = None
        self._sylow = {}
        self._joins = {}

    def __len__(self):
        return len(self.subgroups)

    @property
    def order(self):
        return len(self.elements)

    @property
    def trivial(self):
        return 0

    @property
    def top(self):
        return len(self.subgroups) - 1

    def find(self, members):
        """Id of the subgroup with exactly these members, or None."""
        mask = 0
        for x in members:
            mask |= 1 << x
        return self._by_mask.get(mask)

    def contains(self, big, small):
        """True iff subgroup ``small`` is contained in subgroup ``big``."""
        a = self.subgroups[small].mask
        return a & self.subgroups[big].mask == a

    def up(self, h):
        """Bitset of ids strictly above subgroup h."""
        if self._up is None:
            up = [0] * len(self.subgroups)
            for h_id in range(len(self.subgroups) - 1, -1, -1):
                acc = 0
                for k in self.covers[h_id]:
                    acc |= (1 << k) | up[k]
                up[h_id] = acc
            self._up = up
        return self._up[h]

    def below_or_equal(self, top):
        """Bitset of ids contained in subgroup ``top`` (including itself)."""
        mask = self.subgroups[top].mask
        bits = 0
        for s in self.subgroups[: top + 1]:
            if s.mask & mask == s.mask:
                bits |= 1 << s.id
        return bits

    def join(self, x, y):
        """Id of the subgroup x + y (the product X x Y for coprime orders)."""
        key = (x, y) if x <= y else (y, x)
        try:
            return self._joins[key]
        except KeyError:
            pass
        add = self.add
        members = {add[a][b] for a in self.subgroups[x].members for b in self.subgroups[y].members}
        sid = self.find(members)
        if sid is None:
            raise ValueError(f"subgroups {x} and {y} do not generate a listed subgroup")
        self._joins[key] = sid
        return sid

    def to_dict(self):
        up_edges = [[h, k] for h, ks in enumerate(self.covers) for k in ks]
        return {
            "group": dict(self.group.to_dict(), order=self.order, moduli=list(self.group.moduli)),
            "elements": [list(c) for c in self.elements],
            "subgroups": [
                {"id": s.id, "order": s.order, "members": list(s.members)} for s in self.subgroups
            ],
            "covers": up_edges,
        }

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, separators=(",", ":"))
            fh.write("\n")


def _element_table(moduli):
    elements = list(product(*(range(m) for m in moduli)))
    strides = []
    acc = 1
    for m in reversed(moduli):
        strides.append(acc)
        acc *= m
    strides.reverse()

    def index(coords):
        return sum(c * s for c, s in zip(coords, strides))

    add = [
        [index(tuple((a + b) % m for a, b, m in zip(x, y, moduli))) for y in elements]
        for x in elements
    ]
    return elements, add


def _element_orders(add, size):
    orders = [0] * size
    for g in range(size):
        k, x = 1, g
        while x != 0:
            x = add[x][g]
            k += 1
        orders[g] = k
    return orders


def build_lattice(spec: GroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> SubgroupLattice:
    """Enumerate every subgroup of ``spec`` by closure, starting from {e}.

    Each known subgroup H is extended by every element g with g not in H but
    r*g in H for a prime r dividing |G|; <H, g> is then the union of the
    cosets H + k*g, 0 <= k < r. Every subgroup is reached this way through a
    chain of prime-index steps, and those steps are exactly the covers.
    """
    size = spec.order
    if size > max_order:
        raise OracleBoundError(f"group order {size} exceeds the oracle bound {max_order}")
    elements, add = _element_table(spec.moduli)
    primes = [spec.p] + ([spec.q] if spec.q is not None else [])

    def times(r, g):
        x = 0
        for _ in range(r):
            x = add[x][g]
        return x

    found = {1: (0,)}  # mask -> members
    edges = set()
    queue = [1]
    head = 0
    while head < len(queue):
        h_mask = queue[head]
        head += 1
        h_members = found[h_mask]
        done = bytearray(size)
        for x in h_members:
            done[x] = 1
        for g in range(size):
            if done[g]:
                continue
            for r in primes:
                if (h_mask >> times(r, g)) & 1:
                    break
            else:
                continue
            members = list(h_members)
            coset = g
            for _ in range(1, r):
                members.extend(add[x][coset] for x in h_members)
                coset = add[coset][g]
            k_mask = 0
            for x in members:
                k_mask |= 1 << x
                done[x] = 1
            if k_mask not in found:
                found[k_mask] = tuple(sorted(members))
                queue.append(k_mask)
            edges.add((h_mask, k_mask))

    ordered = sorted(found.items(), key=lambda kv: (len(kv[1]), kv[1]))
    ids = {mask: i for i, (mask, _) in enumerate(ordered)}
    subgroups = [Subgroup(i, members, mask) for i, (mask, members) in enumerate(ordered)]
    covers = [[] for _ in subgroups]
    for h_mask, k_mask in edges:
        covers[ids[h_mask]].append(ids[k_mask])
    covers = [tuple(sorted(c)) for c in covers]
    return SubgroupLattice(spec, subgroups, covers, elements, add, _element_orders(add, size))


@dataclass(frozen=True)
class ChainCounts:
    n: int
    h: int
    profile: ChainProfile


def _length_vectors(lattice, top, allowed):
    """vec[h][l] = number of chains h = H_1 < ... < H_{l+1} = top using ids in ``allowed``."""
    vec = {top: [1]}
    for h_id in range(top - 1, -1, -1):
        if not (allowed >> h_id) & 1:
            continue
        acc = []
        for k in _iter_bits(lattice.up(h_id) & allowed):
            v = vec[k]
            if len(v) + 1 > len(acc):
                acc.extend([0] * (len(v) + 1 - len(acc)))
            for l, c in enumerate(v):
                acc[l + 1] += c
        vec[h_id] = acc
    return vec


def count_chains_to(lattice, top):
    """(n, h, profile) for chains of subgroups of ``top`` that end at ``top``."""
    if top == lattice.trivial:
        raise ValueError("chain counts are defined here for non-trivial groups only")
    vec = _length_vectors(lattice, top, lattice.below_or_equal(top))
    width = max(len(v) for v in vec.values())
    profile = [0] * width
    n = 0
    for h_id, v in vec.items():
        total = sum(v)
        n += total
        if h_id != lattice.trivial:
            for l, c in enumerate(v):
                profile[l] += c
    return ChainCounts(n, sum(profile), ChainProfile(tuple(profile)))


def count_chains(lattice: SubgroupLattice) -> ChainCounts:
    """n(G), h(G) and (h_1, ..., h_L) by dynamic programming on the containment DAG."""
    if lattice._counts is None:
        lattice._counts = count_chains_to(lattice, lattice.top)
    return lattice._counts


def count_weak_classes(lattice: SubgroupLattice) -> int:
    """Fuzzy subgroups of G up to order of values plus position of the zero set.

    Each chain with s >= 2 terms carries two classes (lowest level zero or
    not); the one-term chain {G} carries one, since the constant zero
    function is not counted.
    """
    top = lattice.top
    vec = _length_vectors(lattice, top, lattice.below_or_equal(top))
    total = 0
    for v in vec.values():
        for l, c in enumerate(v):
            total += c if l == 0 else 2 * c
    return total


def enumerate_chains_to(lattice, top, nontrivial=False):
    """Yield chains ending at ``top`` in lexicographic order of id sequences."""
    allowed = lattice.below_or_equal(top)
    succ = {}

    def successors(h_id):
        try:
            return succ[h_id]
        except KeyError:
            out = succ[h_id] = sorted(_iter_bits(lattice.up(h_id) & allowed))
            return out

    def extend(prefix):
        last = prefix[-1]
        if last == top:
            yield Chain(tuple(prefix))
            return
        for k in successors(last):
            prefix.append(k)
            yield from extend(prefix)
            prefix.pop()

    for start in _iter_bits(allowed):
        if nontrivial and start == lattice.trivial:
            continue
        yield from extend([start])


def enumerate_chains(lattice: SubgroupLattice, max_chains: int = DEFAULT_MAX_CHAINS):
    """Every proper chain ending at G, each exactly once, in lexicographic order."""
    total = count_chains(lattice).n
    if total > max_chains:
        raise OracleBoundError(f"{total} chains exceed the enumeration bound {max_chains}")
    return enumerate_chains_to(lattice, lattice.top)


def _is_power_of(x, p):
    while x % p == 0:
        x //= p
    return x == 1


def sylow_decompose(lattice: SubgroupLattice, sub) -> tuple[int, int]:
    """Split a subgroup into its p-part and q-part (both as subgroup ids of G)."""
    spec = lattice.group
    if not spec.two_prime:
        raise ValueError("sylow_decompose needs a two-prime group")
    sid = sub.id if isinstance(sub, Subgroup) else sub
    try:
        return lattice._sylow[sid]
    except KeyError:
        pass
    members = lattice.subgroups[sid].members
    orders = lattice.element_orders
    a_part = lattice.find(x for x in members if _is_power_of(orders[x], spec.p))
    b_part = lattice.find(x for x in members if _is_power_of(orders[x], spec.q))
    assert lattice.subgroups[a_part].order * lattice.subgroups[b_part].order == len(members)
    lattice._sylow[sid] = (a_part, b_part)
    return a_part, b_part


def sylow_subgroups(lattice):
    """Ids of the Sylow p-subgroup A and Sylow q-subgroup B of G."""
    return sylow_decompose(lattice, lattice.top)


def _squeeze(parts, trivial):
    out = []
    for x in parts:
        if x == trivial or (out and out[-1] == x):
            continue
        out.append(x)
    return out


def restrict_chain(lattice: SubgroupLattice, chain: Chain) -> tuple[Chain, Chain]:
    """The pair of chains in A and in B that ``chain`` is restricted by.

    Each term is split into its Sylow parts; in each sequence the trivial
    subgroup is dropped and of two equal neighbours the right one is deleted.
    """
    if chain.terms[0] == lattice.trivial:
        raise ValueError("restriction is defined for chains with a non-trivial first term")
    if chain.terms[-1] != lattice.top:
        raise ValueError("chain does not end at G")
    parts = [sylow_decompose(lattice, t) for t in chain.terms]
    a_chain = _squeeze([a for a, _ in parts], lattice.trivial)
    b_chain = _squeeze([b for _, b in parts], lattice.trivial)
    return Chain(tuple(a_chain)), Chain(tuple(b_chain))


def restriction_counts(lattice, max_chains=DEFAULT_MAX_CHAINS):
    """Map (chain_A, chain_B) -> number of chains of H(G) restricted by that pair."""
    counts = {}
    for chain in enumerate_chains(lattice, max_chains):
        if chain.terms[0] == lattice.trivial:
            continue
        key = restrict_chain(lattice, chain)
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_restricted_by(lattice: SubgroupLattice, chain_A: Chain, chain_B: Chain, max_chains=DEFAULT_MAX_CHAINS) -> int:
    """Number of chains in H(G) whose restriction is (chain_A, chain_B), by brute force."""
    target = (chain_A, chain_B)
    return sum(
        1
        for chain in enumerate_chains(lattice, max_chains)
        if chain.terms[0] != lattice.trivial and restrict_chain(lattice, chain) == target
    )


def chain_to_membership(lattice: SubgroupLattice, chain: Chain) -> FuzzyMembership:
    """Rank of x is the index of the first chain term containing x."""
    if chain.terms[-1] != lattice.top:
        raise ValueError("chain does not end at G")
    terms = chain.terms
    level = [len(terms)] * lattice.order
    subgroups = lattice.subgroups
    for rank in range(len(terms) - 1, 0, -1):
        for x in subgroups[terms[rank - 1]].members:
            level[x] = rank
    return FuzzyMembership(tuple(level))


def is_closed(lattice, members):
    """Brute-force subgroup test: non-empty and closed under x - y."""
    members = set(members)
    if 0 not in members:
        return False
    add = lattice.add
    neg = _negation(lattice)
    return all(add[x][neg[y]] in members for x in members for y in members)


def _negation(lattice):
    neg = getattr(lattice, "_neg", None)
    if neg is None:
        neg = [row.index(0) for row in lattice.add]
        lattice._neg = neg
    return neg


def membership_to_chain(lattice: SubgroupLattice, mu: FuzzyMembership) -> Chain:
    """Chain of level subsets of ``mu``; every slice must be a subgroup."""
    if len(mu.level_of) != lattice.order:
        raise InvalidMembershipError(
            f"membership has {len(mu.level_of)} entries, group has {lattice.order} elements"
        )
    levels = mu.level_of
    by_level = sorted(range(len(levels)), key=levels.__getitem__)
    sorted_levels = sorted(levels)
    terms = []
    for r in sorted(set(levels)):
        members = frozenset(by_level[: bisect_right(sorted_levels, r)])
        # every subgroup is listed, so a miss means the slice is not closed
        sid = lattice._by_set.get(members)
        if sid is None:
            raise InvalidMembershipError(f"level slice <= {r} is not a subgroup: {sorted(members)}")
        terms.append(sid)
    return Chain(tuple(terms))
