"""Brauer quotients of M_(2a,b,c) at p-subgroups and the vertex catalog.

For a p-subgroup Q the Brauer quotient M(Q) has a basis indexed by the
canonical basis vectors whose unsigned data is Q-stable, so its dimension
is a fixed-point count.  Two counting routes are provided:

``"enumerate"``
    walk the whole canonical basis and test each vector;
``"search"``
    build only the fixed vectors: supports of gamma and delta must be
    unions of Q-orbits on indices, and ``g`` must commute with Q, which a
    choice of ``g(x)`` propagates along the whole orbit of ``x``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Sequence

from .model import ModelVector, enumerate_basis, signed_matchings, theta_fixed
from .perms import GeneratorSet, SignedPermutation, check_odd_prime, make_sigma
from .repdata import ModelIndex, model_dim

TwoRowComposition = tuple[int, int]

ENUMERATE_THRESHOLD = 50_000


@dataclass(frozen=True)
class OmegaElement:
    """A set partition of ``{1..r}`` into ``s`` pairs and one block of ``k`` singletons."""

    pairs: tuple[tuple[int, int], ...]
    rest: tuple[int, ...]

    def __post_init__(self):
        pts = [x for pr in self.pairs for x in pr] + list(self.rest)
        if sorted(pts) != list(range(1, len(pts) + 1)):
            raise ValueError(f"pairs and rest must partition 1..r: {self}")

    @property
    def s(self) -> int:
        return len(self.pairs)

    @property
    def k(self) -> int:
        return len(self.rest)

    @property
    def r(self) -> int:
        return 2 * self.s + self.k


@dataclass(frozen=True)
class VertexDescriptor:
    """Sylow p-subgroup of ``V_{p lam} x C2 wr S_{tp} x C2 wr S_{up}``."""

    r: int
    lam: TwoRowComposition
    t: int
    u: int
    p: int
    generators: GeneratorSet | None = None

    @property
    def name(self) -> str:
        l1, l2 = self.lam
        return f"Syl_{self.p}(V_{self.p}({l1},{l2}) x C2wrS_{self.t * self.p} x C2wrS_{self.u * self.p})"


@dataclass(frozen=True)
class SummandRow:
    s2: int
    t: int
    u: int
    local_dim: int
    complement_dim: int

    @property
    def dim(self) -> int:
        return self.local_dim * self.complement_dim


# -- subgroups ---------------------------------------------------------------


def r_r_gens(r: int, p: int, n: int) -> GeneratorSet:
    """The diagonal cyclic group generated by ``sigma_1 ... sigma_r``."""
    check_odd_prime(p)
    g = SignedPermutation.identity(n)
    for j in range(1, r + 1):
        g = g * make_sigma(j, p, n)
    return GeneratorSet(n, (g,))


def r_omega_gens(omega: OmegaElement, p: int, n: int) -> GeneratorSet:
    check_odd_prime(p)
    gens = [make_sigma(i, p, n) * make_sigma(j, p, n) for i, j in omega.pairs]
    gens += [make_sigma(j, p, n) for j in omega.rest]
    return GeneratorSet(n, tuple(gens))


def q_subgroup_gens(lam: TwoRowComposition, t: int, u: int, p: int, n: int) -> GeneratorSet:
    """Explicit generators of the vertex group when ``|lam|, t, u < p``.

    In that range every Sylow subgroup involved is its own base group, so the
    diagonal part is generated by ``sigma_i sigma_{i+s}`` and the tail by the
    single ``sigma_j``.
    """
    check_odd_prime(p)
    s = sum(lam)
    if s >= p or t >= p or u >= p:
        raise ValueError(f"vertex for lam={lam}, t={t}, u={u} at p={p} is available only symbolically")
    r = 2 * s + t + u
    if r * p > n:
        raise ValueError(f"r*p = {r * p} exceeds n = {n}")
    gens = [make_sigma(i, p, n) * make_sigma(i + s, p, n) for i in range(1, s + 1)]
    gens += [make_sigma(j, p, n) for j in range(2 * s + 1, r + 1)]
    return GeneratorSet(n, tuple(gens))


# -- fixed points ------------------------------------------------------------


def index_orbits(gens: GeneratorSet) -> list[tuple[int, ...]]:
    """Orbits on ``{1..n}`` of the group generated by the unsigned images of ``gens``."""
    n = gens.degree
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h in gens:
        for i in range(1, n + 1):
            a, b = find(i), find(abs(h(i)))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)
    return [tuple(v) for _, v in sorted(groups.items())]


def _orbit_unions(orbits: Sequence[tuple[int, ...]], size: int) -> Iterator[tuple[int, ...]]:
    """Index sets of the given total size that are unions of ``orbits``."""

    def rec(i, need):
        if need == 0:
            yield ()
            return
        if i == len(orbits):
            return
        o = orbits[i]
        if len(o) <= need:
            for tail in rec(i + 1, need - len(o)):
                yield (i, *tail)
        yield from rec(i + 1, need)

    for choice in rec(0, size):
        yield tuple(sorted(x for i in choice for x in orbits[i]))


def _extend(assign: dict[int, int], x: int, y: int, gens: GeneratorSet) -> dict[int, int] | None:
    """Set ``g(x) = y`` and close under commuting with every generator."""
    new = dict(assign)
    work = [(x, y)]
    while work:
        u, w = work.pop()
        if abs(u) == abs(w):
            return None
        if u in new:
            if new[u] != w:
                return None
            continue
        if w in new:
            return None
        new[u], new[w], new[-u], new[-w] = w, u, -w, -u
        for h in gens:
            work.append((h(u), h(w)))
    return new


def _commuting_matchings(points: frozenset[int], gens: GeneratorSet) -> Iterator[dict[int, int]]:
    if not points:
        yield {}
        return
    x = min(points)
    for y in sorted(points - {x}):
        for sgn in (1, -1):
            piece = _extend({}, x, sgn * y, gens)
            if piece is None:
                continue
            used = frozenset(abs(k) for k in piece)
            for rest in _commuting_matchings(points - used, gens):
                merged = dict(piece)
                merged.update(rest)
                yield merged


def iter_fixed_basis(idx: ModelIndex, gens: GeneratorSet) -> Iterator[ModelVector]:
    """Canonical basis vectors whose unsigned data is stable under ``gens`` (search route)."""
    n = idx.n
    if gens.degree != n:
        raise ValueError(f"generators have degree {gens.degree}, module has degree {n}")
    orbits = index_orbits(gens)
    everything = frozenset(range(1, n + 1))
    for gamma in _orbit_unions(orbits, idx.b):
        left = [o for o in orbits if not set(o) & set(gamma)]
        for delta in _orbit_unions(left, idx.c):
            support = everything - set(gamma) - set(delta)
            for m in _commuting_matchings(support, gens):
                g = SignedPermutation.from_mapping(n, {k: v for k, v in m.items() if k > 0})
                yield ModelVector(g, gamma, delta, 1)


def count_fixed_basis(idx: ModelIndex, gens: GeneratorSet) -> int:
    """Size of ``iter_fixed_basis`` without materialising vectors."""
    n = idx.n
    if gens.degree != n:
        raise ValueError(f"generators have degree {gens.degree}, module has degree {n}")

    @lru_cache(maxsize=None)
    def matchings(points: frozenset[int]) -> int:
        if not points:
            return 1
        x = min(points)
        total = 0
        for y in points - {x}:
            for sgn in (1, -1):
                piece = _extend({}, x, sgn * y, gens)
                if piece is not None:
                    total += matchings(points - frozenset(abs(k) for k in piece))
        return total

    orbits = index_orbits(gens)
    everything = frozenset(range(1, n + 1))
    total = 0
    for gamma in _orbit_unions(orbits, idx.b):
        left = [o for o in orbits if not set(o) & set(gamma)]
        for delta in _orbit_unions(left, idx.c):
            total += matchings(everything - set(gamma) - set(delta))
    return total


def _count_chunk(idx: ModelIndex, gens: GeneratorSet, s_sets: list[tuple[int, ...]]) -> int:
    n = idx.n
    total = 0
    for s_set in s_sets:
        rest = tuple(x for x in range(1, n + 1) if x not in s_set)
        for matching in signed_matchings(s_set):
            g = SignedPermutation.from_mapping(n, matching)
            for gamma in combinations(rest, idx.b):
                delta = tuple(x for x in rest if x not in gamma)
                total += theta_fixed(ModelVector(g, gamma, delta), gens)
    return total


def brauer_quotient_dim(idx: ModelIndex, gens: GeneratorSet, method: str = "auto", jobs: int = 1) -> int:
    """Number of canonical basis vectors fixed (up to sign) by the group generated by ``gens``.

    ``method`` is ``"enumerate"``, ``"search"`` or ``"auto"`` (enumerate up
    to ``ENUMERATE_THRESHOLD`` basis vectors).  ``jobs > 1`` splits the
    enumeration route over worker processes; the count does not depend on it.
    """
    if gens.degree != idx.n:
        raise ValueError(f"generators have degree {gens.degree}, module has degree {idx.n}")
    if method == "auto":
        method = "enumerate" if model_dim(idx) <= ENUMERATE_THRESHOLD else "search"
    if method == "search":
        return count_fixed_basis(idx, gens)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if jobs <= 1:
        return sum(theta_fixed(v, gens) for v in enumerate_basis(idx))
    s_sets = list(combinations(range(1, idx.n + 1), 2 * idx.a))
    chunks = [s_sets[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1)) as pool:
        return sum(pool.map(_count_chunk, [idx] * jobs, [gens] * jobs, chunks))


def orbit_signature(v: ModelVector, r: int, p: int) -> tuple[int, int, int]:
    """Numbers of the blocks ``{(j-1)p+1..jp}``, ``j <= r``, inside S(v), T(v) and U(v)."""
    counts = [0, 0, 0]
    supports = (v.g_support(), set(v.gamma), set(v.delta))
    for j in range(1, r + 1):
        block = set(range((j - 1) * p + 1, j * p + 1))
        for k, sup in enumerate(supports):
            if block <= sup:
                counts[k] += 1
    return counts[0], counts[1], counts[2]


# -- combinatorics of the first reduction step ------------------------------


def omega_enum(s: int, k: int) -> list[OmegaElement]:
    """Every way to split ``{1..2s+k}`` into ``s`` unordered pairs and a ``k``-set."""
    if s < 0 or k < 0:
        raise ValueError("s and k must be non-negative")
    r = 2 * s + k
    points = tuple(range(1, r + 1))
    out = []
    for rest in combinations(points, k):
        left = tuple(x for x in points if x not in rest)
        for pairs in _perfect_matchings(left):
            out.append(OmegaElement(pairs, rest))
    return out


def _perfect_matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    x, rest = points[0], points[1:]
    for i, y in enumerate(rest):
        for tail in _perfect_matchings(rest[:i] + rest[i + 1 :]):
            yield ((x, y), *tail)


def c_count(s: int, k: int) -> int:
    """Closed form ``(2s+k)! / (2^s s! k!)`` for ``|omega_enum(s, k)|``."""
    return factorial(2 * s + k) // (2**s * factorial(s) * factorial(k))


def omega_star(s: int, k: int) -> OmegaElement:
    """``{{1,s+1}, ..., {s,2s}, {2s+1..2s+k}}``."""
    return OmegaElement(tuple((i, i + s) for i in range(1, s + 1)), tuple(range(2 * s + 1, 2 * s + k + 1)))


def two_row_compositions(s: int) -> list[TwoRowComposition]:
    return [(l1, s - l1) for l1 in range(s, -1, -1)]


def t_sets(idx: ModelIndex, p: int, r: int) -> tuple[list[tuple[int, int, int]], list[tuple[TwoRowComposition, int, int]]]:
    """``T^r`` as triples ``(2s, t, u)`` and its refinement ``T'_r`` as ``(lam, t, u)``."""
    check_odd_prime(p)
    if r * p > idx.n:
        raise ValueError(f"r*p = {r * p} exceeds n = {idx.n}")
    big_t, big_t_prime = [], []
    for s in range(r // 2 + 1):
        for t in range(r - 2 * s + 1):
            u = r - 2 * s - t
            if s * p <= idx.a and t * p <= idx.b and u * p <= idx.c:
                big_t.append((2 * s, t, u))
                big_t_prime.extend((lam, t, u) for lam in two_row_compositions(s))
    return big_t, big_t_prime


def case_r_dim(s: int, t: int, u: int, p: int) -> int:
    """Closed form ``(2p)^s C(k, t) c_{s,k}`` for the Brauer quotient of M_(2sp,tp,up) at R_r."""
    k = t + u
    return (2 * p) ** s * comb(k, t) * c_count(s, k)


def n_lambda_dim(lam: TwoRowComposition, t: int, u: int, p: int) -> int:
    s, k = sum(lam), t + u
    return c_count(s, k) * comb(s, lam[0]) * p**s * comb(k, t)


def summand_dim_table(idx: ModelIndex, p: int, r: int, method: str = "auto") -> list[SummandRow]:
    """One row per ``(2s, t, u)`` in ``T^r``: local Brauer quotient times complement dimension."""
    big_t, _ = t_sets(idx, p, r)
    rows = []
    for s2, t, u in big_t:
        s = s2 // 2
        local_idx = ModelIndex(s * p, t * p, u * p)
        local = brauer_quotient_dim(local_idx, r_r_gens(r, p, r * p), method=method)
        complement = model_dim(ModelIndex(idx.a - s * p, idx.b - t * p, idx.c - u * p))
        rows.append(SummandRow(s2, t, u, local, complement))
    return rows


def vertex_catalog(idx: ModelIndex, p: int) -> list[VertexDescriptor]:
    """Candidate vertices of non-projective summands, one per conjugacy class.

    ``lam`` and its reversal give conjugate groups, so only ``lam[0] >= lam[1]`` is kept.
    """
    check_odd_prime(p)
    out = []
    for r in range(1, idx.n // p + 1):
        _, big_t_prime = t_sets(idx, p, r)
        for lam, t, u in big_t_prime:
            if lam[0] < lam[1]:
                continue
            gens = None
            if sum(lam) < p and t < p and u < p:
                gens = q_subgroup_gens(lam, t, u, p, idx.n)
            out.append(VertexDescriptor(r, lam, t, u, p, gens))
    return out
