"""Signed permutations: the hyperoctahedral group C2 wr S_n.

Symbols are the integers ``1..n`` and their negatives, with the bar
involution realised as negation.  A signed permutation is stored by the
images of ``1..n``; the image of ``-x`` is always ``-image(x)``, so
bar-equivariance holds by construction.

Composition follows the right-action convention used throughout the
package: ``g * h`` applies ``g`` first and then ``h``, and the conjugate
``g ** h`` is ``h^-1 * g * h``.
"""

from __future__ import annotations

import itertools
import random
import re
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from math import factorial, lcm
from typing import Iterable, Iterator, Sequence

from sympy.ntheory import isprime, primitive_root

from .errors import CapExceeded

__all__ = [
    "SignedPermutation",
    "CycleType",
    "GeneratorSet",
    "compose",
    "cycle_type",
    "is_conjugate",
    "centralizer_order",
    "class_size",
    "group_order",
    "all_cycle_types",
    "enumerate_group",
    "random_signed_permutation",
    "make_sigma",
    "make_tau",
    "make_rho",
    "make_f",
    "make_z",
    "least_primitive_root",
    "check_odd_prime",
    "group_closure_order",
    "group_closure",
]


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")


def least_primitive_root(p: int) -> int:
    """Smallest primitive root modulo the odd prime ``p`` (2 for p = 3)."""
    check_odd_prime(p)
    return int(primitive_root(p))


@dataclass(frozen=True)
class SignedPermutation:
    """A permutation of ``{±1, ..., ±n}`` commuting with negation.

    Attributes:
        images: ``images[i - 1]`` is the (signed) image of ``i``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if sorted(abs(x) for x in images) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation of degree {n}: {images}")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> SignedPermutation:
        """Build from a partial map on positive or negative symbols; unmapped symbols are fixed."""
        images = list(range(1, n + 1))
        for x, y in mapping.items():
            if x > 0:
                images[x - 1] = y
            else:
                images[-x - 1] = -y
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> SignedPermutation:
        """Product of cycles on signed symbols, composed left to right.

        Raises ``ValueError`` if the product does not commute with negation.
        """
        full = {x: x for k in range(1, n + 1) for x in (k, -k)}
        for cyc in cycles:
            cyc = list(cyc)
            if any(x == 0 or abs(x) > n for x in cyc):
                raise ValueError(f"cycle {cyc} has symbols outside degree {n}")
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"cycle {cyc} repeats a symbol")
            step = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
            full = {x: step.get(y, y) for x, y in full.items()}
        for x, y in full.items():
            if full[-x] != -y:
                raise ValueError("cycle product does not commute with the bar involution")
        return cls(tuple(full[k] for k in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> SignedPermutation:
        """Parse cycle notation such as ``"(1 2)(1- 2-)"``; ``"x-"`` denotes the barred symbol."""
        body = text.strip()
        if not re.fullmatch(r"(\s*\([^()]*\)\s*)*", body):
            raise ValueError(f"malformed cycle string: {text!r}")
        cycles = []
        for group in re.findall(r"\(([^()]*)\)", body):
            tokens = group.split()
            cyc = []
            for tok in tokens:
                m = re.fullmatch(r"(\d+)(-?)", tok)
                if not m or int(m.group(1)) == 0:
                    raise ValueError(f"bad symbol {tok!r} in {text!r}")
                cyc.append(-int(m.group(1)) if m.group(2) else int(m.group(1)))
            if cyc:
                cycles.append(cyc)
        if n is None:
            n = max((abs(x) for cyc in cycles for x in cyc), default=0)
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1] if x > 0 else -self.images[-x - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __pow__(self, other):
        if isinstance(other, SignedPermutation):
            return other.inverse() * self * other
        if other < 0:
            return self.inverse() ** (-other)
        result = SignedPermutation.identity(self.n)
        for _ in range(other):
            result = result * self
        return result

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            if y > 0:
                inv[y - 1] = i
            else:
                inv[-y - 1] = -i
        return SignedPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.images, start=1))

    def hat(self) -> tuple[int, ...]:
        """Image in S_n under forgetting signs (0-free tuple, ``hat[i-1] = |g(i)|``)."""
        return tuple(abs(y) for y in self.images)

    def support(self) -> frozenset[int]:
        """Signed symbols moved by the permutation."""
        moved = [i for i, y in enumerate(self.images, start=1) if y != i]
        return frozenset(moved) | frozenset(-i for i in moved)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint non-trivial cycles on signed symbols in canonical print order."""
        seen: set[int] = set()
        out = []
        for k in range(1, self.n + 1):
            if k in seen:
                continue
            cyc = [k]
            x = self(k)
            while x != k:
                cyc.append(x)
                x = self(x)
            if len(cyc) == 1:
                seen.update((k, -k))
                continue
            seen.update(cyc)
            out.append(tuple(cyc))
            if -k not in seen:
                seen.update(-x for x in cyc)
                out.append(tuple(-x for x in cyc))
        return out

    def __str__(self) -> str:
        parts = ["(" + " ".join(f"{abs(x)}-" if x < 0 else str(x) for x in c) + ")" for c in self.cycles()]
        return "".join(parts) if parts else "()"

    def __repr__(self) -> str:
        return f"SignedPermutation.parse({str(self)!r}, n={self.n})"

    @cached_property
    def _cycle_type(self) -> CycleType:
        positive, negative = [], []
        seen: set[int] = set()
        for k in range(1, self.n + 1):
            if k in seen:
                continue
            orbit = [k]
            x = self(k)
            while x != k:
                orbit.append(x)
                x = self(x)
            seen.update(orbit)
            seen.update(-x for x in orbit)
            # an orbit is negative exactly when it is closed under the bar map
            if -k in orbit:
                negative.append(len(orbit) // 2)
            else:
                positive.append(len(orbit))
        return CycleType(self.n, tuple(sorted(positive, reverse=True)), tuple(sorted(negative, reverse=True)))


@dataclass(frozen=True)
class CycleType:
    """Conjugacy invariant of a signed permutation.

    ``positive`` and ``negative`` list the lengths of the positive and
    negative cycles (each a partition); together they have total size ``n``.
    """

    n: int
    positive: tuple[int, ...]
    negative: tuple[int, ...]

    def __post_init__(self):
        for part in (self.positive, self.negative):
            if any(r < 1 for r in part) or list(part) != sorted(part, reverse=True):
                raise ValueError(f"cycle lengths must form a partition: {part}")
        if sum(self.positive) + sum(self.negative) != self.n:
            raise ValueError(f"cycle lengths {self.positive}, {self.negative} do not sum to {self.n}")

    @property
    def pos(self) -> dict[int, int]:
        """Map r -> number of positive r-cycles."""
        return dict(Counter(self.positive))

    @property
    def neg(self) -> dict[int, int]:
        """Map r -> number of negative r-cycles."""
        return dict(Counter(self.negative))

    def __str__(self) -> str:
        fmt = lambda part: ",".join(map(str, part))
        return f"{fmt(self.positive)}|{fmt(self.negative)}"


@dataclass(frozen=True)
class GeneratorSet:
    """Finite list of signed permutations of a common degree."""

    degree: int
    elements: tuple[SignedPermutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for g in self.elements:
            if g.n != self.degree:
                raise ValueError(f"generator of degree {g.n} in a set of degree {self.degree}")

    def __iter__(self) -> Iterator[SignedPermutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def compose(g: SignedPermutation, h: SignedPermutation) -> SignedPermutation:
    """Apply ``g`` first, then ``h``."""
    if g.n != h.n:
        raise ValueError(f"degree mismatch: {g.n} vs {h.n}")
    return SignedPermutation(tuple(h(y) for y in g.images))


def cycle_type(g: SignedPermutation) -> CycleType:
    return g._cycle_type


def is_conjugate(g: SignedPermutation, h: SignedPermutation) -> bool:
    if g.n != h.n:
        raise ValueError(f"degree mismatch: {g.n} vs {h.n}")
    return cycle_type(g) == cycle_type(h)


def centralizer_order(ct: CycleType) -> int:
    """Order of the centraliser of an element of cycle type ``ct``."""
    total = 1
    for counts in (ct.pos, ct.neg):
        for r, m in counts.items():
            total *= (2 * r) ** m * factorial(m)
    return total


def group_order(n: int) -> int:
    return 2**n * factorial(n)


def class_size(ct: CycleType, n: int | None = None) -> int:
    if n is not None and n != ct.n:
        raise ValueError(f"cycle type has degree {ct.n}, not {n}")
    q, rem = divmod(group_order(ct.n), centralizer_order(ct))
    if rem:
        raise ArithmeticError(f"centraliser order does not divide the group order for {ct}")
    return q


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first, *rest)


def all_cycle_types(n: int) -> list[CycleType]:
    """Every cycle type of degree ``n`` (one per conjugacy class)."""
    return [
        CycleType(n, pos, neg)
        for k in range(n, -1, -1)
        for pos in _partitions(k)
        for neg in _partitions(n - k)
    ]


def enumerate_group(n: int) -> Iterator[SignedPermutation]:
    """All ``2^n n!`` elements of C2 wr S_n (brute-force oracle)."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * x for s, x in zip(signs, perm)))


def random_signed_permutation(n: int, rng: random.Random | None = None) -> SignedPermutation:
    rng = rng or random.Random()
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return SignedPermutation(tuple(x if rng.random() < 0.5 else -x for x in perm))


def _fit(last: int, n: int, what: str) -> None:
    if last > n:
        raise ValueError(f"{what} needs degree at least {last}, got {n}")


def make_sigma(j: int, p: int, n: int) -> SignedPermutation:
    """The positive p-cycle on the j-th block ``(j-1)p+1 .. jp``."""
    if j < 1:
        raise ValueError(f"block index must be positive, got {j}")
    _fit(j * p, n, f"sigma_{j}")
    start = (j - 1) * p + 1
    block = list(range(start, start + p))
    return SignedPermutation.from_mapping(n, {x: block[(k + 1) % p] for k, x in enumerate(block)})


def make_tau(j: int, p: int, n: int) -> SignedPermutation:
    """Negate every symbol of the j-th block."""
    if j < 1:
        raise ValueError(f"block index must be positive, got {j}")
    _fit(j * p, n, f"tau_{j}")
    start = (j - 1) * p + 1
    return SignedPermutation.from_mapping(n, {x: -x for x in range(start, start + p)})


def make_rho(i: int, p: int, n: int) -> SignedPermutation:
    """Swap blocks i and i+1 pointwise."""
    if i < 1:
        raise ValueError(f"block index must be positive, got {i}")
    _fit((i + 1) * p, n, f"rho_{i}")
    mapping = {}
    for k in range(1, p + 1):
        x, y = (i - 1) * p + k, i * p + k
        mapping[x], mapping[y] = y, x
    return SignedPermutation.from_mapping(n, mapping)


def make_f(a: int, n: int) -> SignedPermutation:
    """The involution ``(1 a+1)(2 a+2)...(a 2a)`` with its barred copy."""
    if a < 0:
        raise ValueError(f"a must be non-negative, got {a}")
    _fit(2 * a, n, f"f_{a}")
    mapping = {}
    for k in range(1, a + 1):
        mapping[k], mapping[k + a] = k + a, k
    return SignedPermutation.from_mapping(n, mapping)


def make_z(r: int, p: int, n: int) -> SignedPermutation:
    """Within each of the first r blocks, send local point k to ``x(k-1)+1 mod p``.

    ``x`` is the least primitive root mod p, so conjugation by the result
    raises each block cycle ``sigma_j`` to the power ``x``.
    """
    check_odd_prime(p)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    _fit(r * p, n, f"z_{r}")
    x = least_primitive_root(p)
    mapping = {}
    for j in range(1, r + 1):
        base = (j - 1) * p
        for k in range(1, p + 1):
            mapping[base + k] = base + (x * (k - 1)) % p + 1
    return SignedPermutation.from_mapping(n, mapping)


def group_closure(gens: GeneratorSet, cap: int = 10**6) -> set[SignedPermutation]:
    """Elements of the group generated by ``gens``, by breadth-first closure."""
    identity = SignedPermutation.identity(gens.degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = g * h
            if gh not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"group closure exceeded {cap} elements", progress=len(seen))
                seen.add(gh)
                queue.append(gh)
    return seen


def group_closure_order(gens: GeneratorSet, cap: int = 10**6) -> int:
    return len(group_closure(gens, cap))


def element_order(g: SignedPermutation) -> int:
    ct = cycle_type(g)
    return lcm(*ct.positive, *(2 * r for r in ct.negative))
