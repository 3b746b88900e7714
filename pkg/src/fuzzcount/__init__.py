"""Exact counts of fuzzy subgroups of finite abelian groups of order p^n q^m."""

from .combinatorics import GaussianParams, binomial, gaussian_binomial
from .formulas import (
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
from .groups import GroupSpec

__version__ = "0.1.0"
