"""Dimensions and labels for representations of C2 wr S_n.

Irreducible characters are labelled by bipartitions ``(lam, mu)``; the
simple modules in odd characteristic p by pairs of p-regular partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod

from .partitions import (
    Bipartition,
    Partition,
    bipartitions,
    hook_lengths,
    is_p_regular,
    odd_parts_count,
    p_core,
    p_weight,
)
from .perms import check_odd_prime

Tableau = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ModelIndex:
    """Parameters ``(a, b, c)`` of an involution-model module; ``n = 2a + b + c``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError(f"model index entries must be non-negative: {self}")

    @property
    def n(self) -> int:
        return 2 * self.a + self.b + self.c

    @classmethod
    def all_of_degree(cls, n: int) -> list[ModelIndex]:
        return [cls(a, b, n - 2 * a - b) for a in range(n // 2 + 1) for b in range(n - 2 * a + 1)]


@dataclass(frozen=True)
class BlockLabel:
    """Block of F[C2 wr S_n]: ``((gamma, v), (delta, w))`` with gamma, delta p-cores."""

    gamma: Partition
    v: int
    delta: Partition
    w: int

    def size(self, p: int) -> int:
        return sum(self.gamma) + self.v * p + sum(self.delta) + self.w * p

    def as_tuple(self) -> tuple[tuple[Partition, int], tuple[Partition, int]]:
        return (self.gamma, self.v), (self.delta, self.w)


def hook_dim(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook-length formula."""
    n = sum(lam)
    return factorial(n) // prod(h for row in hook_lengths(lam) for h in row)


@lru_cache(maxsize=None)
def count_standard_tableaux(lam: Partition) -> int:
    """Same count by removing the largest entry from each corner in turn."""
    if not lam:
        return 1
    total = 0
    for i, row in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < row:
            smaller = tuple(x for x in lam[:i] + (row - 1,) + lam[i + 1 :] if x > 0)
            total += count_standard_tableaux(smaller)
    return total


def specht_dim(lam: Partition, mu: Partition) -> int:
    """Dimension of the hyperoctahedral Specht module labelled by ``(lam, mu)``."""
    n = sum(lam) + sum(mu)
    return comb(n, sum(lam)) * hook_dim(tuple(lam)) * hook_dim(tuple(mu))


def standard_fillings(shape: Partition, entries: tuple[int, ...]) -> list[Tableau]:
    """Standard tableaux of ``shape`` using the given increasing entries."""
    if not shape:
        return [()]
    out = []
    largest = entries[-1]
    for i, row in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < row:
            smaller = shape[:i] + (row - 1,) + shape[i + 1 :]
            for t in standard_fillings(tuple(x for x in smaller if x > 0), entries[:-1]):
                rows = [list(r) for r in t]
                if i == len(rows):
                    rows.append([])
                rows[i].append(largest)
                out.append(tuple(tuple(r) for r in rows))
    return out


def enumerate_standard_tableaux(lam: Partition, mu: Partition) -> list[tuple[Tableau, Tableau]]:
    """Standard ``(lam, mu)``-tableaux as (positive part, negative part) row readings.

    An entry ``x`` in the first component stands for ``{x, x-bar}``, in the
    second for ``[x, x-bar]``.  Output is sorted.
    """
    lam, mu = tuple(lam), tuple(mu)
    n = sum(lam) + sum(mu)
    out = []
    for left in combinations(range(1, n + 1), sum(lam)):
        right = tuple(x for x in range(1, n + 1) if x not in left)
        for t_plus in standard_fillings(lam, left):
            for t_minus in standard_fillings(mu, right):
                out.append((t_plus, t_minus))
    return sorted(out)


def block_label(lam: Partition, mu: Partition, p: int) -> BlockLabel:
    check_odd_prime(p)
    return BlockLabel(p_core(lam, p), p_weight(lam, p), p_core(mu, p), p_weight(mu, p))


def simple_labels(n: int, p: int) -> list[Bipartition]:
    """Bipartitions of n with both sides p-regular."""
    check_odd_prime(p)
    return [(lam, mu) for lam, mu in bipartitions(n) if is_p_regular(lam, p) and is_p_regular(mu, p)]


def model_constituents(idx: ModelIndex) -> list[Bipartition]:
    """Irreducible constituents of the involution-model module: ``b`` odd parts left, ``c`` right."""
    return [
        (lam, mu)
        for lam, mu in bipartitions(idx.n)
        if odd_parts_count(lam) == idx.b and odd_parts_count(mu) == idx.c
    ]


def model_dim(idx: ModelIndex) -> int:
    """Closed-form dimension: conjugates of f_a times the choices of gamma-support."""
    a, b, c, n = idx.a, idx.b, idx.c, idx.n
    conjugates, rem = divmod(2**n * factorial(n), 4**a * factorial(a) * 2 ** (b + c) * factorial(b + c))
    if rem:
        raise ArithmeticError(f"non-integral conjugate count for {idx}")
    return conjugates * comb(b + c, b)
