"""Partitions, bipartitions, p-cores and the minimal hook-addition sets.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty tuple is the empty partition.  Bipartitions are pairs of
such tuples.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapExceeded

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]

DEFAULT_WEIGHT_CAP = 30


def validate_partition(parts: Iterable[int]) -> Partition:
    lam = tuple(int(x) for x in parts)
    if any(x < 1 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """``"5,1"`` -> ``(5, 1)``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return validate_partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}: {exc}") from None


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def parse_bipartition(text: str) -> Bipartition:
    """``"2,1|1"`` -> ``((2, 1), (1,))``."""
    if text.count("|") != 1:
        raise ValueError(f"bipartition needs exactly one '|': {text!r}")
    left, right = text.split("|")
    return parse_partition(left), parse_partition(right)


def format_bipartition(pair: Bipartition) -> str:
    return f"{format_partition(pair[0])}|{format_partition(pair[1])}"


def _descend(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descend(n - first, first):
            yield (first, *rest)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return tuple(_descend(n, n))


def bipartitions(n: int) -> list[Bipartition]:
    """All pairs ``(lam, mu)`` with ``|lam| + |mu| = n``, larger ``|lam|`` first."""
    return [(lam, mu) for k in range(n, -1, -1) for lam in partitions(k) for mu in partitions(n - k)]


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of ``lam`` is at least the matching prefix sum of ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: |{lam}| != |{mu}|")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def is_p_regular(lam: Partition, p: int) -> bool:
    return all(m < p for m in Counter(lam).values())


def odd_parts_count(lam: Partition) -> int:
    return sum(1 for x in lam if x % 2)


def hook_lengths(lam: Partition) -> list[list[int]]:
    lamc = conjugate(lam)
    return [[lam[i] - j + lamc[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


# -- p-cores via the abacus -------------------------------------------------


def beta_numbers(lam: Partition, length: int | None = None) -> list[int]:
    """First-column hook lengths, padded with zeros to ``length`` beads."""
    length = len(lam) if length is None else length
    if length < len(lam):
        raise ValueError("too few beads for the partition")
    padded = list(lam) + [0] * (length - len(lam))
    return [padded[i] + length - 1 - i for i in range(length)]


def _from_beta(beta: Iterable[int]) -> Partition:
    beads = sorted(beta, reverse=True)
    k = len(beads)
    return tuple(x for x in (beads[i] - (k - 1 - i) for i in range(k)) if x > 0)


@lru_cache(maxsize=None)
def _core_and_weight(lam: Partition, p: int) -> tuple[Partition, int]:
    beta = beta_numbers(lam)
    runners: dict[int, int] = Counter(b % p for b in beta)
    weight = sum(b // p for b in beta) - sum(k * (k - 1) // 2 for k in runners.values())
    pushed = [r + p * level for r, k in runners.items() for level in range(k)]
    return _from_beta(pushed), weight


def p_core(lam: Partition, p: int) -> Partition:
    """p-core, computed by sliding beads up the p-runner abacus."""
    return _core_and_weight(tuple(lam), p)[0]


def p_weight(lam: Partition, p: int) -> int:
    return _core_and_weight(tuple(lam), p)[1]


def is_p_core(lam: Partition, p: int) -> bool:
    return p_core(lam, p) == tuple(lam)


# -- rim-hook stripping oracle ----------------------------------------------


def remove_rim_hooks(lam: Partition, p: int) -> list[Partition]:
    """Every partition obtained from ``lam`` by removing a single rim p-hook.

    Works on the diagram directly: the rim hook attached to cell (i, j) with
    hook length p runs from the end of row i down to the foot of column j.
    """
    lamc = conjugate(lam)
    out = []
    for i, row in enumerate(lam):
        for j in range(row):
            leg = lamc[j] - i - 1
            if row - j + leg != p:
                continue
            new = list(lam)
            last = i + leg
            for k in range(i, last):
                new[k] = lam[k + 1] - 1
            new[last] = j
            out.append(tuple(x for x in new if x > 0))
    return out


def cores_by_stripping(lam: Partition, p: int) -> set[Partition]:
    """Set of terminal partitions over all orders of stripping rim p-hooks."""
    terminal: set[Partition] = set()
    frontier = {tuple(lam)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for mu in frontier:
            children = remove_rim_hooks(mu, p)
            if not children:
                terminal.add(mu)
            for child in children:
                if child not in seen:
                    seen.add(child)
                    nxt.add(child)
        frontier = nxt
    return terminal


# -- hook addition and the E/w machinery ------------------------------------


def add_hooks_enum(gamma: Partition, p: int, w: int) -> tuple[Partition, ...]:
    """All partitions of ``|gamma| + w p`` whose p-core is ``gamma``."""
    gamma = tuple(gamma)
    if not is_p_core(gamma, p):
        raise ValueError(f"{gamma} is not a {p}-core")
    if w < 0:
        raise ValueError(f"w must be non-negative, got {w}")
    return tuple(lam for lam in partitions(sum(gamma) + w * p) if p_core(lam, p) == gamma)


@lru_cache(maxsize=None)
def w_and_E(gamma: Partition, p: int, b: int, cap: int = DEFAULT_WEIGHT_CAP) -> tuple[int, tuple[Partition, ...]]:
    """Minimal number of p-hooks to add to ``gamma`` to reach exactly ``b`` odd parts.

    Returns the weight and the partitions attaining it, in lexicographically
    decreasing order.
    """
    gamma = tuple(gamma)
    if b < 0:
        raise ValueError(f"b must be non-negative, got {b}")
    if not is_p_core(gamma, p):
        raise ValueError(f"{gamma} is not a {p}-core")
    for w in range(cap + 1):
        size = sum(gamma) + w * p
        # a partition with b odd parts has size congruent to b mod 2
        if size < b or (size - b) % 2:
            continue
        hits = tuple(
            lam for lam in partitions(size) if odd_parts_count(lam) == b and p_core(lam, p) == gamma
        )
        if hits:
            return w, hits
    raise CapExceeded(f"no partition with core {gamma} and {b} odd parts within {cap} {p}-hooks", progress=cap)


def hypothesis_check(gamma: Partition, p: int, b: int, cap: int = DEFAULT_WEIGHT_CAP) -> bool:
    """False exactly when ``b >= p`` and ``w_{b-p}(gamma) == w_b(gamma) - 1``."""
    if b < p:
        return True
    return w_and_E(tuple(gamma), p, b - p, cap)[0] != w_and_E(tuple(gamma), p, b, cap)[0] - 1


def maximal_elements(family: Iterable[Partition]) -> list[Partition]:
    """Members not strictly dominated by another member (input order kept)."""
    items = list(dict.fromkeys(tuple(x) for x in family))
    return [x for x in items if not any(y != x and dominates(y, x) for y in items)]
