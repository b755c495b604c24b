"""Decomposition-matrix columns for the blocks reached by involution models.

For p-cores ``gamma``, ``delta`` the rows are ``E_b(gamma) x E_c(delta)``;
the columns are labelled by pairs of dominance-maximal elements, and each
column carries ones exactly on one block of a set partition of the rows.
The partition is found by exact-cover search on each side separately and
multiplied out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .errors import HypothesisViolation, InternalError
from .partitions import (
    DEFAULT_WEIGHT_CAP,
    Bipartition,
    Partition,
    dominates,
    hypothesis_check,
    is_p_core,
    is_p_regular,
    maximal_elements,
    w_and_E,
)
from .perms import check_odd_prime
from .repdata import BlockLabel

DEFAULT_CANDIDATE_CAP = 1000


@dataclass(frozen=True)
class DecompColumn:
    label: Bipartition
    rows: frozenset[Bipartition]

    def sorted_rows(self) -> list[Bipartition]:
        return sorted(self.rows, reverse=True)


@dataclass(frozen=True)
class NormaliserBlockLabel:
    """Block ``b(v_tilde, w_tilde) (x) B(tail)`` of the normaliser ``N x C2 wr S_{n-rp}``."""

    v_tilde: int
    w_tilde: int
    tail: BlockLabel

    def __post_init__(self):
        if self.v_tilde < 0 or self.w_tilde < 0:
            raise ValueError("normaliser block weights must be non-negative")

    @property
    def r(self) -> int:
        return self.v_tilde + self.w_tilde


@dataclass(frozen=True)
class FactorPartition:
    """Set partitions of one side ``E`` into blocks each headed by a maximal element."""

    labels: tuple[Partition, ...]
    candidates: tuple[dict[Partition, frozenset[Partition]], ...]
    truncated: bool = False

    @property
    def unique(self) -> bool:
        return len(self.candidates) == 1 and not self.truncated

    def forced(self) -> dict[Partition, frozenset[Partition]]:
        """Members that sit under the same label in every candidate."""
        return {m: frozenset.intersection(*(c[m] for c in self.candidates)) for m in self.labels}


@dataclass(frozen=True)
class DecompResult:
    block: BlockLabel
    columns: tuple[DecompColumn, ...]
    unique: bool
    # every candidate column system when the partition is not forced
    candidates: tuple[tuple[DecompColumn, ...], ...] = field(default=())
    ambiguous: frozenset[Bipartition] = frozenset()

    @property
    def all_rows(self) -> frozenset[Bipartition]:
        if self.candidates:
            return frozenset().union(*(c.rows for c in self.candidates[0]))
        return frozenset().union(*(c.rows for c in self.columns))


def _check_cores(gamma: Partition, delta: Partition, p: int) -> None:
    check_odd_prime(p)
    for core in (gamma, delta):
        if not is_p_core(core, p):
            raise ValueError(f"{core} is not a {p}-core")


def rows(
    gamma: Partition, delta: Partition, b: int, c: int, p: int, cap: int = DEFAULT_WEIGHT_CAP
) -> list[Bipartition]:
    """``E_b(gamma) x E_c(delta)`` in reverse-lexicographic order."""
    gamma, delta = tuple(gamma), tuple(delta)
    _check_cores(gamma, delta, p)
    left = w_and_E(gamma, p, b, cap)[1]
    right = w_and_E(delta, p, c, cap)[1]
    return sorted(product(left, right), reverse=True)


def refusal_reason(gamma: Partition, delta: Partition, b: int, c: int, p: int, cap: int = DEFAULT_WEIGHT_CAP) -> str | None:
    """Diagnostic naming the failed equality, or None when both sides pass."""
    for name, core, k in (("gamma", gamma, b), ("delta", delta, c)):
        if not hypothesis_check(core, p, k, cap):
            w_lo = w_and_E(tuple(core), p, k - p, cap)[0]
            w_hi = w_and_E(tuple(core), p, k, cap)[0]
            return (
                f"hypothesis fails on the {name} side: w_{k - p}({list(core)}) = {w_lo}"
                f" = w_{k}({list(core)}) - 1 at p={p}"
            )
    return None


def _require_hypothesis(gamma, delta, b, c, p, cap) -> None:
    reason = refusal_reason(gamma, delta, b, c, p, cap)
    if reason:
        raise HypothesisViolation(reason)


def column_labels(
    gamma: Partition, delta: Partition, b: int, c: int, p: int, cap: int = DEFAULT_WEIGHT_CAP
) -> list[Bipartition]:
    gamma, delta = tuple(gamma), tuple(delta)
    _check_cores(gamma, delta, p)
    _require_hypothesis(gamma, delta, b, c, p, cap)
    left = maximal_elements(w_and_E(gamma, p, b, cap)[1])
    right = maximal_elements(w_and_E(delta, p, c, cap)[1])
    labels = [(nu, nut) for nu in left for nut in right]
    for nu, nut in labels:
        if not (is_p_regular(nu, p) and is_p_regular(nut, p)):
            raise InternalError(f"column label {(nu, nut)} is not {p}-regular")
    return labels


def _exact_cover(columns: dict, rows_: dict[object, list]) -> Iterator[list]:
    """Knuth's Algorithm X on a dict-of-sets incidence structure."""
    x = {col: set() for col in columns}
    for name, cols in rows_.items():
        for col in cols:
            x[col].add(name)

    def select(r):
        removed = []
        for j in rows_[r]:
            for i in x[j]:
                for k in rows_[i]:
                    if k != j:
                        x[k].remove(i)
            removed.append(x.pop(j))
        return removed

    def deselect(r, removed):
        for j in reversed(rows_[r]):
            x[j] = removed.pop()
            for i in x[j]:
                for k in rows_[i]:
                    if k != j:
                        x[k].add(i)

    solution: list = []

    def search():
        if not x:
            yield list(solution)
            return
        col = min(x, key=lambda k: len(x[k]))
        for r in sorted(x[col], key=repr):
            solution.append(r)
            removed = select(r)
            yield from search()
            deselect(r, removed)
            solution.pop()

    yield from search()


def factor_partition(family, p: int, cap: int = DEFAULT_CANDIDATE_CAP) -> FactorPartition:
    """All admissible set partitions of ``family`` (each block: one maximal element above the rest)."""
    items = list(dict.fromkeys(tuple(x) for x in family))
    if not items:
        raise ValueError("cannot partition an empty family")
    if len({sum(x) for x in items}) != 1:
        raise ValueError("family members must have equal size")
    labels = tuple(maximal_elements(items))
    others = [x for x in items if x not in labels]
    universe = {("member", x) for x in items} | {("open", m) for m in labels}
    choices: dict[object, list] = {}
    for m in labels:
        choices[("head", m)] = [("open", m), ("member", m)]
    for x in others:
        for m in labels:
            if dominates(m, x):
                choices[("put", x, m)] = [("member", x)]
    candidates = []
    truncated = False
    for sol in _exact_cover(universe, choices):
        if len(candidates) == cap:
            truncated = True
            break
        blocks = {m: {m} for m in labels}
        for row in sol:
            if row[0] == "put":
                blocks[row[2]].add(row[1])
        candidates.append({m: frozenset(s) for m, s in blocks.items()})
    if not candidates:
        raise InternalError(f"no admissible set partition of {items}")
    return FactorPartition(labels, tuple(candidates), truncated)


def _columns_from(left: dict, right: dict) -> tuple[DecompColumn, ...]:
    cols = []
    for nu, lrows in left.items():
        for nut, rrows in right.items():
            cols.append(DecompColumn((nu, nut), frozenset(product(lrows, rrows))))
    return tuple(sorted(cols, key=lambda col: col.label, reverse=True))


def decomposition_columns(
    gamma: Partition,
    delta: Partition,
    b: int,
    c: int,
    p: int,
    cap: int = DEFAULT_WEIGHT_CAP,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
) -> DecompResult:
    """Columns of the decomposition matrix labelled by the dominance-maximal pairs.

    When either side admits more than one set partition, ``unique`` is
    False, ``columns`` keep only the rows forced in every candidate,
    ``candidates`` lists all column systems and ``ambiguous`` the rows whose
    column is not pinned down.
    """
    labels = column_labels(gamma, delta, b, c, p, cap)
    gamma, delta = tuple(gamma), tuple(delta)
    wl, el = w_and_E(gamma, p, b, cap)
    wr, er = w_and_E(delta, p, c, cap)
    fl = factor_partition(el, p, candidate_cap)
    fr = factor_partition(er, p, candidate_cap)
    block = BlockLabel(gamma, wl, delta, wr)
    assert {col for col in labels} == {(x, y) for x in fl.labels for y in fr.labels}
    if fl.unique and fr.unique:
        return DecompResult(block, _columns_from(fl.candidates[0], fr.candidates[0]), True)
    systems = tuple(_columns_from(x, y) for x, y in product(fl.candidates, fr.candidates))
    forced = _columns_from(fl.forced(), fr.forced())
    every = frozenset(product(el, er))
    pinned = frozenset().union(*(col.rows for col in forced))
    return DecompResult(block, forced, False, systems, every - pinned)


def brauer_correspondent(nb: NormaliserBlockLabel, gamma: Partition, delta: Partition, p: int) -> BlockLabel:
    """Block of ``C2 wr S_n`` matching a normaliser block: weights add."""
    check_odd_prime(p)
    gamma, delta = tuple(gamma), tuple(delta)
    if nb.tail.gamma != gamma or nb.tail.delta != delta:
        raise ValueError(f"tail block {nb.tail} does not use the cores {gamma}, {delta}")
    return BlockLabel(gamma, nb.tail.v + nb.v_tilde, delta, nb.tail.w + nb.w_tilde)


@dataclass(frozen=True)
class ProjectivityReport:
    block: BlockLabel
    a: int
    b: int
    c: int
    column_labels: tuple[Bipartition, ...]
    row_counts: tuple[int, ...]
    total_rows: int
    unique: bool


def projectivity_report(
    gamma: Partition, delta: Partition, b: int, c: int, p: int, cap: int = DEFAULT_WEIGHT_CAP
) -> ProjectivityReport:
    res = decomposition_columns(gamma, delta, b, c, p, cap)
    n = res.block.size(p)
    twice_a = n - b - c
    if twice_a < 0 or twice_a % 2:
        raise ValueError(f"n - b - c = {twice_a} is not a non-negative even number")
    system = res.columns if res.unique else res.candidates[0]
    counts = tuple(len(col.rows) for col in system)
    total = len(res.all_rows)
    if sum(counts) != total:
        raise InternalError(f"column blocks cover {sum(counts)} rows, expected {total}")
    return ProjectivityReport(
        res.block, twice_a // 2, b, c, tuple(col.label for col in system), counts, total, res.unique
    )
