"""Cross-checks between the closed formulas, the vector pairs and the oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bijection import build_chain, chain_to_pair, enumerate_pairs
from .combinatorics import binomial
from .formulas import (
    count_fuzzy_subgroups,
    cyclic_profile,
    elementary_abelian_profile,
    interleave_count,
)
from .groups import two_prime_groups
from .oracle import (
    build_lattice as _build_lattice,
    chain_to_membership,
    count_chains,
    enumerate_chains,
    enumerate_chains_to,
    membership_to_chain,
    restrict_chain,
    sylow_subgroups,
)


@lru_cache(maxsize=None)
def build_lattice(spec):
    return _build_lattice(spec)


@dataclass
class CheckResult:
    name: str
    compared: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def expect(self, ok, detail):
        self.compared += 1
        if not ok:
            self.failures.append(detail)

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "compared": self.compared,
            "failures": [str(f) for f in self.failures[:20]],
        }


def oracle_profiles(spec):
    """Sylow profiles of a two-prime group taken from the brute-force lattices of its parts."""
    a = count_chains(build_lattice(spec.p_part())).profile
    b = count_chains(build_lattice(spec.q_part())).profile
    return a, b


def check_main_theorem(groups, sabotage=False):
    res = CheckResult("main_theorem_vs_oracle")
    for k, g in enumerate(groups):
        lattice = build_lattice(g)
        oracle_n = count_chains(lattice).n
        pa, pb = oracle_profiles(g)
        formula_n = count_fuzzy_subgroups(g, pa, pb)
        if sabotage and k == 0:
            formula_n += 2
        res.expect(formula_n == oracle_n, f"{g.label()}: formula {formula_n} != oracle {oracle_n}")
    return res


def check_profile_formulas(groups):
    """Closed-form profiles against oracle profiles for every cyclic or elementary Sylow part."""
    res = CheckResult("profile_formulas_vs_oracle")
    seen = set()
    for g in groups:
        for part in (g.p_part(), g.q_part()):
            if part in seen:
                continue
            seen.add(part)
            oracle = count_chains(build_lattice(part)).profile
            if part.is_cyclic_p():
                res.expect(oracle == cyclic_profile(part.n), f"{part.label()}: cyclic {oracle}")
            if part.is_elementary_p():
                res.expect(
                    oracle == elementary_abelian_profile(part.n, part.p),
                    f"{part.label()}: elementary {oracle}",
                )
    return res


def check_chain_identities(groups):
    """n = 2h = 2 sum(profile), n even, for every group and each Sylow part."""
    res = CheckResult("n_equals_2h_and_parity")
    for g in groups:
        for spec in (g, g.p_part(), g.q_part()):
            c = count_chains(build_lattice(spec))
            res.expect(
                c.n == 2 * c.h == 2 * c.profile.total and c.n % 2 == 0,
                f"{spec.label()}: n={c.n} h={c.h} profile={list(c.profile)}",
            )
    return res


def check_interleave(max_ij):
    res = CheckResult("interleave_vs_vector_pairs")
    for i in range(1, max_ij + 1):
        for j in range(1, max_ij + 1):
            total = sum(len(enumerate_pairs(i, j, s)) for s in range(max(i, j), i + j + 1))
            res.expect(interleave_count(i, j) == total, f"h({i},{j})={interleave_count(i, j)} vs |V|={total}")
            res.expect(interleave_count(i, j) == interleave_count(j, i), f"h({i},{j}) != h({j},{i})")
            if j <= i:
                for k in range(j + 1):
                    size = len(enumerate_pairs(i, j, i + k))
                    expected = binomial(i + k, i) * binomial(i, j - k)
                    res.expect(size == expected, f"|V_{i},{j},{i + k}|={size} vs {expected}")
    return res


def sylow_chain_sets(lattice):
    a_id, b_id = sylow_subgroups(lattice)
    chains_a = list(enumerate_chains_to(lattice, a_id, nontrivial=True))
    chains_b = list(enumerate_chains_to(lattice, b_id, nontrivial=True))
    return chains_a, chains_b


def check_restriction(groups, max_chains=10**6):
    res = CheckResult("restriction_constancy")
    for g in groups:
        lattice = build_lattice(g)
        counts = {}
        for chain in enumerate_chains(lattice, max_chains):
            if chain.terms[0] == lattice.trivial:
                continue
            key = restrict_chain(lattice, chain)
            counts[key] = counts.get(key, 0) + 1
        chains_a, chains_b = sylow_chain_sets(lattice)
        total = 0
        for ca in chains_a:
            for cb in chains_b:
                got = counts.get((ca, cb), 0)
                total += got
                want = interleave_count(len(ca), len(cb))
                res.expect(got == want, f"{g.label()}: {ca.terms},{cb.terms} -> {got}, h(i,j)={want}")
        h = count_chains(lattice).h
        res.expect(total == h == sum(counts.values()), f"{g.label()}: pair total {total} vs h(G) {h}")
    return res


def check_bijection(groups, max_chains=10**6):
    res = CheckResult("bijection_round_trips")
    for g in groups:
        lattice = build_lattice(g)
        # phi then psi, over every chain of H(G)
        for chain in enumerate_chains(lattice, max_chains):
            if chain.terms[0] == lattice.trivial:
                continue
            chain_a, chain_b = restrict_chain(lattice, chain)
            pair = chain_to_pair(chain, lattice)
            res.expect(
                build_chain(pair, chain_a, chain_b, lattice) == chain,
                f"{g.label()}: psi(phi({chain.terms})) differs",
            )
        # psi then phi, over every vector pair and every pair of Sylow chains
        chains_a, chains_b = sylow_chain_sets(lattice)
        built = set()
        for ca in chains_a:
            for cb in chains_b:
                i, j = len(ca), len(cb)
                for s in range(max(i, j), i + j + 1):
                    for pair in enumerate_pairs(i, j, s):
                        chain = build_chain(pair, ca, cb, lattice)
                        ok = (
                            chain_to_pair(chain, lattice) == pair
                            and restrict_chain(lattice, chain) == (ca, cb)
                            and chain not in built
                        )
                        built.add(chain)
                        res.expect(ok, f"{g.label()}: phi(psi({pair})) differs or chain repeated")
    return res


def check_membership(specs, max_chains=10**6):
    res = CheckResult("membership_round_trips")
    for g in specs:
        lattice = build_lattice(g)
        for chain in enumerate_chains(lattice, max_chains):
            mu = chain_to_membership(lattice, chain)
            res.expect(membership_to_chain(lattice, mu) == chain, f"{g.label()}: {chain.terms}")
    return res


def run_battery(max_order=200, max_ij=6, chain_order=100, primes=None, sabotage=False):
    groups = list(two_prime_groups(max_order, primes))
    small = [g for g in groups if g.order <= chain_order]
    checks = [
        check_main_theorem(groups, sabotage=sabotage),
        check_profile_formulas(groups),
        check_chain_identities(groups),
        check_interleave(max_ij),
        check_restriction(small),
        check_bijection(small),
        check_membership(small),
    ]
    return groups, checks
