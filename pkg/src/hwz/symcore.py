"""Permutations, integer partitions and set partitions of [n] = {1, ..., n}.

Permutations act on 1-based points.  A permutation is stored as its image
tuple ``images`` with ``images[i-1] = p(i)``.  The composition convention is
fixed once and for all as (p * q)(k) = p(q(k)), so a product ``a * t1 * t2``
means "apply t2 first when reading right-to-left", i.e. right-multiplication
appends a factor acting before nothing else that follows it.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple


class Transposition(NamedTuple):
    """A transposition (a b) in normalized form a < b."""

    a: int
    b: int


def normalize_transposition(a: int, b: int) -> Transposition:
    if a == b:
        raise ValueError("transposition needs two distinct points")
    return Transposition(a, b) if a < b else Transposition(b, a)


class IntPartition:
    """Integer partition: weakly decreasing positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in ps):
            raise ValueError("parts must be positive")
        self.parts = ps

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self.parts:
            m[p] = m.get(p, 0) + 1
        return m

    def z(self) -> int:
        """The centralizer order z = prod_i m_i! * i^m_i."""
        z = 1
        for i, m in self.multiplicities.items():
            z *= factorial(m) * i**m
        return z

    def class_size(self) -> int:
        """Number of permutations of this cycle type: n!/z."""
        return factorial(self.n) // self.z()

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("IntPartition", self.parts))

    def __repr__(self) -> str:
        return f"IntPartition({list(self.parts)})"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as tuples, in reverse-lexicographic order.

    >>> list(partitions_of(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for p in range(min(maxpart, remaining), 0, -1):
            yield from gen(remaining - p, p, prefix + (p,))

    yield from gen(n, n, ())


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(partitions_of(n))


class Permutation:
    """Element of S_n, stored as the image tuple on 1..n."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for i, x in enumerate(cyc):
                imgs[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(imgs)

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        return cls.from_cycles(n, [(a, b)])

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (p * q)(k) = p(q(k))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.images[q - 1] for q in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles as tuples, each starting at its smallest point."""
        return cycles_of(self.images)

    def cycle_type(self) -> IntPartition:
        return IntPartition(len(c) for c in self.cycles())

    @property
    def num_cycles(self) -> int:
        return len(self.cycles())

    def cayley_length(self) -> int:
        """|sigma| = n - #sigma, the word length in transpositions."""
        return self.n - self.num_cycles

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(("Permutation", self.images))

    def __repr__(self) -> str:
        cyc = " ".join(
            "(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1
        )
        return f"Permutation[{cyc or 'id'}; n={self.n}]"


def cycles_of(images: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of an image tuple (1-based)."""
    n = len(images)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = images[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = images[x - 1]
        out.append(tuple(cyc))
    return tuple(out)


def num_cycles(images: tuple[int, ...]) -> int:
    n = len(images)
    seen = [False] * (n + 1)
    count = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x - 1]
    return count


def cycle_type_tuple(images: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles_of(images)), reverse=True))


def canonical_of_type(mu: Iterable[int]) -> Permutation:
    """The permutation (1..mu1)(mu1+1..mu1+mu2)... with consecutive cycles."""
    parts = tuple(sorted(mu, reverse=True))
    n = sum(parts)
    cycles = []
    start = 1
    for p in parts:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return Permutation.from_cycles(n, cycles)


class SetPartition:
    """Partition of [n] into disjoint nonempty blocks."""

    __slots__ = ("blocks", "n")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bs = tuple(sorted(tuple(sorted(b)) for b in blocks))
        points = [x for b in bs for x in b]
        n = len(points)
        if sorted(points) != list(range(1, n + 1)):
            raise ValueError("blocks must partition 1..n")
        self.blocks = bs
        self.n = n

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls([(i,) for i in range(1, n + 1)])

    @classmethod
    def one_block(cls, n: int) -> "SetPartition":
        return cls([tuple(range(1, n + 1))])

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def __le__(self, other: "SetPartition") -> bool:
        """Refinement order: self <= other iff each block of self lies in a block of other."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        where = {}
        for i, b in enumerate(other.blocks):
            for x in b:
                where[x] = i
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(("SetPartition", self.blocks))

    def __repr__(self) -> str:
        return "SetPartition(" + ", ".join(map(str, map(set, self.blocks))) + ")"

    def block_sizes(self) -> IntPartition:
        return IntPartition(len(b) for b in self.blocks)


class DisjointSet:
    """Union-find over 1..n with an undo stack for backtracking search."""

    __slots__ = ("parent", "size", "ncomp", "_trail")

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.ncomp = n
        self._trail: list[int] = []

    def find(self, x: int) -> int:
        # no path compression: keeps unions reversible
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self._trail.append(0)
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.ncomp -= 1
        self._trail.append(ry)
        return True

    def undo(self) -> None:
        ry = self._trail.pop()
        if ry:
            rx = self.parent[ry]
            self.parent[ry] = ry
            self.size[rx] -= self.size[ry]
            self.ncomp += 1


def orbit_partition(gens: Iterable[Permutation], n: int | None = None) -> SetPartition:
    """Orbits of the group generated by ``gens``, via union-find over cycles."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("need n when gens is empty")
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("size mismatch")
    ds = DisjointSet(n)
    for g in gens:
        for cyc in g.cycles():
            for x in cyc[1:]:
                ds.union(cyc[0], x)
    blocks: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        blocks.setdefault(ds.find(x), []).append(x)
    return SetPartition(blocks.values())


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of [n], enumerated by restricted-growth strings."""
    if n == 0:
        yield SetPartition([])
        return

    def gen(rgs: list[int], maxval: int):
        i = len(rgs)
        if i == n:
            blocks: dict[int, list[int]] = {}
            for pt, lab in enumerate(rgs, start=1):
                blocks.setdefault(lab, []).append(pt)
            yield SetPartition(blocks.values())
            return
        for lab in range(maxval + 2):
            rgs.append(lab)
            yield from gen(rgs, max(maxval, lab))
            rgs.pop()

    yield from gen([0], 0)


def coarsenings(p: SetPartition) -> Iterator[SetPartition]:
    """All set partitions coarser than p (including p itself), each once."""
    k = p.num_blocks
    for grouping in set_partitions(k):
        yield SetPartition(
            tuple(x for i in grp for x in p.blocks[i - 1]) for grp in grouping.blocks
        )


def partitions_of_set(items: tuple) -> Iterator[tuple[tuple, ...]]:
    """Partitions of an arbitrary finite sequence into blocks (tuples of items)."""
    k = len(items)
    if k == 0:
        yield ()
        return
    for sp in set_partitions(k):
        yield tuple(tuple(items[i - 1] for i in b) for b in sp.blocks)


def bell_number(n: int) -> int:
    return sum(1 for _ in set_partitions(n))


def mobius_to_top(num_blocks: int) -> int:
    """Moebius function mu(pi, 1_n) of the partition lattice: (-1)^(k-1) (k-1)!."""
    k = num_blocks
    return (-1) ** (k - 1) * factorial(k - 1)


def pochhammer(x: Fraction | int, k: int) -> Fraction:
    """Rising factorial x(x+1)...(x+k-1)."""
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out
