"""The involution-model module M_(2a,b,c) and its signed basis.

A basis vector is a triple ``(g, gamma, delta)``:

* ``g`` is an involution made of ``a`` disjoint positive 2-cycles,
* ``gamma`` lists the indices ``i`` carrying an unordered pair ``{i, i-bar}``,
* ``delta`` lists the indices carrying an oriented bracket ``[i, i-bar]``,

with the three supports partitioning ``{1..n}``.  In canonical form both
index lists are increasing and every bracket is positively oriented; the
sign of a vector records what canonicalisation cost.  Permuting the
gamma entries contributes the sign of the sorting permutation (the
inflated sign character of S_b), and on delta both the sorting sign and a
factor -1 per reversed bracket.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .perms import GeneratorSet, SignedPermutation
from .repdata import ModelIndex


@dataclass(frozen=True)
class ModelVector:
    g: SignedPermutation
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        n = self.g.n
        moved = {abs(x) for x in self.g.support()}
        pieces = sorted(moved) + list(self.gamma) + list(self.delta)
        if sorted(pieces) != list(range(1, n + 1)):
            raise ValueError("supports of g, gamma and delta must partition 1..n")
        if list(self.gamma) != sorted(self.gamma) or list(self.delta) != sorted(self.delta):
            raise ValueError("gamma and delta must be increasing")
        for x in moved:
            y = self.g(x)
            if self.g(y) != x or abs(y) == x:
                raise ValueError(f"g must be a product of positive 2-cycles, got {self.g}")

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def a(self) -> int:
        return len(self.g.support()) // 4

    def unsigned(self) -> ModelVector:
        return ModelVector(self.g, self.gamma, self.delta, 1)

    def g_support(self) -> frozenset[int]:
        """The indices moved by ``g`` (the set S(v))."""
        return frozenset(abs(x) for x in self.g.support())

    def to_json(self) -> dict:
        return {
            "g": str(self.g),
            "gamma": [[i] for i in self.gamma],
            "delta": [[i] for i in self.delta],
            "sign": self.sign,
        }

    @classmethod
    def from_json(cls, data: dict | str, n: int) -> ModelVector:
        if isinstance(data, str):
            data = json.loads(data)
        g = SignedPermutation.parse(data["g"], n=n)
        gamma = tuple(entry[0] for entry in data["gamma"])
        delta = tuple(entry[0] for entry in data["delta"])
        return cls(g, gamma, delta, int(data["sign"]))


def signed_matchings(points: tuple[int, ...]) -> Iterator[dict[int, int]]:
    """All ways to pair up ``points`` into positive 2-cycles ``(x ±y)``."""
    if not points:
        yield {}
        return
    x, rest = points[0], points[1:]
    for k, y in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for sgn in (1, -1):
            for m in signed_matchings(remaining):
                m = dict(m)
                m[x], m[y] = sgn * y, sgn * x
                yield m


def enumerate_basis(idx: ModelIndex) -> Iterator[ModelVector]:
    """Canonical basis of M_(2a,b,c), all with sign +1."""
    n = idx.n
    everything = tuple(range(1, n + 1))
    for s_set in combinations(everything, 2 * idx.a):
        rest = tuple(x for x in everything if x not in s_set)
        for matching in signed_matchings(s_set):
            g = SignedPermutation.from_mapping(n, matching)
            for gamma in combinations(rest, idx.b):
                delta = tuple(x for x in rest if x not in gamma)
                yield ModelVector(g, gamma, delta, 1)


def _sort_sign(values: list[int]) -> int:
    """Sign of the permutation sorting ``values`` (distinct entries)."""
    sign = 1
    seen = [False] * len(values)
    order = sorted(range(len(values)), key=values.__getitem__)
    for start in range(len(values)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def act(v: ModelVector, h: SignedPermutation) -> ModelVector:
    """Right action of ``h`` followed by canonicalisation of the tuples."""
    if h.n != v.n:
        raise ValueError(f"degree mismatch: {v.n} vs {h.n}")
    g = v.g ** h
    gamma = [abs(h(i)) for i in v.gamma]
    images = [h(i) for i in v.delta]
    flips = sum(1 for y in images if y < 0)
    delta = [abs(y) for y in images]
    sign = v.sign * _sort_sign(gamma) * _sort_sign(delta) * (-1) ** flips
    return ModelVector(g, tuple(sorted(gamma)), tuple(sorted(delta)), sign)


def theta_fixed(v: ModelVector, gens: GeneratorSet | Iterable[SignedPermutation]) -> bool:
    """True iff every generator fixes ``g`` and stabilises both supports, ignoring signs."""
    gamma, delta = set(v.gamma), set(v.delta)
    for h in gens:
        if v.g ** h != v.g:
            return False
        if {abs(h(i)) for i in gamma} != gamma or {abs(h(i)) for i in delta} != delta:
            return False
    return True
