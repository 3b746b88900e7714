"""Exact integer combinatorics: binomials and Gaussian binomials."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import isqrt

__all__ = [
    "is_prime",
    "binomial",
    "GaussianParams",
    "gaussian_binomial",
    "gaussian_binomial_product",
    "load_cache",
    "save_cache",
]


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # result * (n - k + i) is divisible by i: it is i * C(n - k + i, i)
        result = result * (n - k + i) // i
    return result


@dataclass(frozen=True)
class GaussianParams:
    n: int
    m: int
    p: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError(f"Gaussian binomial needs n, m >= 0 (got n={self.n}, m={self.m})")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


_gauss_cache: dict[tuple[int, int, int], int] = {}


def gaussian_binomial_product(n, m, p):
    """Evaluate [n m]_p straight from the product formula.

    Multiplies one numerator factor and divides by one denominator factor per
    step; after step t the running value is [n-m+t t]_p, so each division is
    exact.
    """
    if m < 0 or m > n:
        return 0
    value = 1
    for t in range(1, m + 1):
        value = value * (p ** (n - m + t) - 1) // (p**t - 1)
    return value


def gaussian_binomial(params: GaussianParams | int, m: int | None = None, p: int | None = None) -> int:
    """Number of subgroups of order p^m in the elementary abelian group of order p^n.

    Accepts either a :class:`GaussianParams` or the three integers ``n, m, p``.
    Results are memoized for the life of the process.
    """
    if not isinstance(params, GaussianParams):
        params = GaussianParams(params, m, p)
    n, m, p = params.n, params.m, params.p
    if m > n:
        return 0
    m = min(m, n - m)
    key = (n, m, p)
    try:
        return _gauss_cache[key]
    except KeyError:
        pass
    value = gaussian_binomial_product(n, m, p)
    _gauss_cache.setdefault(key, value)
    return value


def clear_cache():
    _gauss_cache.clear()


CACHE_FILE = "gaussian_binomials.json"


def load_cache(directory):
    """Merge a previously saved table from ``directory`` into the memo cache."""
    path = os.path.join(directory, CACHE_FILE)
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        rows = json.load(fh)
    for n, m, p, value in rows:
        value = int(value)
        if value < 1 or not 0 <= m <= n - m or not is_prime(p):
            raise ValueError(f"corrupt cache entry for [{n} {m}]_{p} in {path}")
        _gauss_cache.setdefault((n, m, p), value)
    return len(rows)


def save_cache(directory):
    os.makedirs(directory, exist_ok=True)
    rows = [[n, m, p, str(v)] for (n, m, p), v in sorted(_gauss_cache.items())]
    path = os.path.join(directory, CACHE_FILE)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(rows, fh)
    os.replace(tmp, path)
    return path
