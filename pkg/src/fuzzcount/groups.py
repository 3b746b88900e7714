"""Finite abelian groups of order p^n q^m, described by exponent partitions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .combinatorics import is_prime


def _check_partition(name, part):
    if not part:
        raise ValueError(f"{name} partition must be non-empty")
    if any(not isinstance(e, int) or e < 1 for e in part):
        raise ValueError(f"{name} partition entries must be positive integers: {list(part)}")
    if any(a < b for a, b in zip(part, part[1:])):
        raise ValueError(f"{name} partition must be non-increasing: {list(part)}")


@dataclass(frozen=True)
class GroupSpec:
    """Z_{p^e1} x ... x Z_{p^ek} (x Z_{q^f1} x ... x Z_{q^fl}).

    ``p_partition`` and ``q_partition`` list cyclic factor exponents in
    non-increasing order.
    """

    p: int
    p_partition: tuple[int, ...]
    q: int | None = None
    q_partition: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "p_partition", tuple(self.p_partition))
        if self.q_partition is not None:
            object.__setattr__(self, "q_partition", tuple(self.q_partition))
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        _check_partition("p", self.p_partition)
        if (self.q is None) != (self.q_partition is None):
            raise ValueError("q and q_partition must be given together")
        if self.q is not None:
            if not is_prime(self.q):
                raise ValueError(f"q={self.q} is not prime")
            if self.q == self.p:
                raise ValueError(f"p and q must differ (both are {self.p})")
            _check_partition("q", self.q_partition)

    @property
    def n(self):
        return sum(self.p_partition)

    @property
    def m(self):
        return sum(self.q_partition) if self.q_partition else 0

    @property
    def two_prime(self):
        return self.q is not None

    @property
    def order(self):
        return self.p**self.n * (self.q**self.m if self.q is not None else 1)

    @property
    def moduli(self):
        """Orders of the cyclic factors, p-part first."""
        mods = [self.p**e for e in self.p_partition]
        if self.q is not None:
            mods += [self.q**e for e in self.q_partition]
        return tuple(mods)

    def p_part(self):
        return GroupSpec(self.p, self.p_partition)

    def q_part(self):
        if self.q is None:
            raise ValueError("single-prime group has no q-part")
        return GroupSpec(self.q, self.q_partition)

    def is_cyclic_p(self):
        return len(self.p_partition) == 1

    def is_elementary_p(self):
        return all(e == 1 for e in self.p_partition)

    def label(self):
        def part(prime, exps):
            return " x ".join(f"Z{prime}^{e}" if e > 1 else f"Z{prime}" for e in exps)

        text = part(self.p, self.p_partition)
        if self.q is not None:
            text += " x " + part(self.q, self.q_partition)
        return text

    def to_dict(self):
        return {
            "p": self.p,
            "p_partition": list(self.p_partition),
            "q": self.q,
            "q_partition": list(self.q_partition) if self.q_partition else None,
        }


def parse_partition(text):
    """Parse "2,1,1" into (2, 1, 1). Order of entries is normalised to non-increasing."""
    try:
        parts = [int(x) for x in str(text).split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"bad partition {text!r}: expected comma-separated positive integers") from None
    if not parts or any(e < 1 for e in parts):
        raise ValueError(f"bad partition {text!r}: expected comma-separated positive integers")
    return tuple(sorted(parts, reverse=True))


def partitions(n, largest=None):
    """All partitions of n as non-increasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def two_prime_groups(max_order, primes=None):
    """Every abelian group of order p^a q^b <= max_order with a, b >= 1.

    ``primes`` optionally restricts the admissible prime divisors. Groups are
    yielded in canonical order: by order, then p-partition, then q-partition.
    """
    for order in range(6, max_order + 1):
        fac = factorize(order)
        if len(fac) != 2:
            continue
        (p, a), (q, b) = sorted(fac.items())
        if primes is not None and (p not in primes or q not in primes):
            continue
        for pp, qp in product(sorted(partitions(a)), sorted(partitions(b))):
            yield GroupSpec(p, pp, q, qp)
