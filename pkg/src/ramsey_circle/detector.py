"""Monochromatic-copy detection in colourings of Z_n.

Two interchangeable detectors are provided.  `detect_bruteforce` scans every
permuted copy of the gap tuple directly.  `detect_dp` runs the subset-sum
dynamic program: when all 2^k subset sums of the gaps are pairwise distinct,
the multiset of gaps used by a path between two vertices is forced by the
arc length alone, so path reachability can be filled in by increasing
subset size.  The reachability pass is evaluated bit-parallel across start
vertices (one n-bit integer per arc length), which keeps the textbook
O(n^2 k) step count but does 64 starts per word.

Both detectors return the same witness on the same input: the copy whose
presentation (smallest vertex, then gap order, then Red before Blue) is
lexicographically least.  A black vertex, when present, matches both colour
classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .core import Colouring, DiscreteInstance, rotate_mask

# Above this many (start, order) walks the copy table is not cached and
# detection streams instead; verdicts and witnesses are identical.
_CACHE_WALK_LIMIT = 400_000


class DuplicateSubsetSumError(ValueError):
    """Two distinct gap subsets share a sum, so the DP ordering collapses."""

    def __init__(self, gaps, first, second, total):
        self.colliding = (first, second)
        fv = tuple(gaps[i] for i in first)
        sv = tuple(gaps[i] for i in second)
        super().__init__(
            f"subset sums are not pairwise distinct: gaps {fv} (indices {first}) "
            f"and {sv} (indices {second}) both sum to {total}")


@dataclass(frozen=True)
class SubsetSumTable:
    """Per-arc-length decomposition table.

    b[l] is the size of the unique gap subset summing to l (0 if none) and
    index_sets[l] lists its gap indices; entry l = n holds the full set.
    """

    n: int
    gaps: tuple[int, ...]
    b: tuple[int, ...]
    index_sets: tuple[Optional[tuple[int, ...]], ...]

    @classmethod
    def build(cls, inst: DiscreteInstance) -> "SubsetSumTable":
        gaps = inst.gaps
        k = len(gaps)
        n = inst.n
        b = [0] * (n + 1)
        index_sets: list[Optional[tuple[int, ...]]] = [None] * (n + 1)
        seen: dict[int, tuple[int, ...]] = {}
        for bits in range(1 << k):
            idx = tuple(i for i in range(k) if bits >> i & 1)
            total = sum(gaps[i] for i in idx)
            if total in seen:
                raise DuplicateSubsetSumError(gaps, seen[total], idx, total)
            seen[total] = idx
            if idx:
                b[total] = len(idx)
                index_sets[total] = idx
        return cls(n=n, gaps=gaps, b=tuple(b), index_sets=tuple(index_sets))

    def values(self, length: int) -> tuple[int, ...]:
        idx = self.index_sets[length]
        assert idx is not None, f"no subset sums to {length}"
        return tuple(self.gaps[i] for i in idx)

    def lengths_by_size(self) -> list[int]:
        """Realizable arc lengths ordered by non-strictly increasing b."""
        real = [length for length in range(1, self.n + 1) if self.b[length]]
        real.sort(key=lambda length: (self.b[length], length))
        return real


@lru_cache(maxsize=64)
def _subset_table(n: int, gaps: tuple[int, ...]) -> SubsetSumTable:
    return SubsetSumTable.build(DiscreteInstance(n=n, gaps=gaps))


@dataclass(frozen=True)
class CopyWitness:
    """A monochromatic permuted copy: k vertices in counterclockwise order.

    Consecutive differences mod n realize gap_order, a permutation of the
    instance's gaps.  colour is Red/Blue, with an OrBlack suffix when the
    black wildcard vertex participates.
    """

    vertices: tuple[int, ...]
    gap_order: tuple[int, ...]
    colour: str

    def revalidates(self, c: Colouring, inst: DiscreteInstance) -> bool:
        k = inst.k
        if len(self.vertices) != k or len(set(self.vertices)) != k:
            return False
        diffs = tuple((self.vertices[(i + 1) % k] - self.vertices[i]) % inst.n
                      for i in range(k))
        if diffs != self.gap_order:
            return False
        if sorted(self.gap_order) != sorted(inst.gaps):
            return False
        base = self.colour.removesuffix("OrBlack")
        cls = c.class_mask("R" if base == "Red" else "B")
        return all(cls >> v & 1 for v in self.vertices)


def _colour_name(base: str, vertices: Sequence[int], black: Optional[int]) -> str:
    name = "Red" if base == "R" else "Blue"
    if black is not None and black in vertices:
        name += "OrBlack"
    return name


def _distinct_orders(gaps: tuple[int, ...]) -> list[tuple[int, ...]]:
    return sorted(set(itertools.permutations(gaps)))


def cyclic_canonical(order: Sequence[int]) -> tuple[int, ...]:
    """The lexicographically least rotation, used to compare cyclic orders."""
    t = tuple(order)
    return min(t[i:] + t[:i] for i in range(len(t)))


def _normalize_restriction(restriction) -> Optional[frozenset]:
    if restriction is None:
        return None
    return frozenset(cyclic_canonical(r) for r in restriction)


def _iter_copies(n: int, gaps: tuple[int, ...]) -> Iterator[tuple[int, tuple[int, ...], tuple[int, ...], int]]:
    """Yield each distinct copy once as (v0, gap_order, vertices, mask).

    v0 is the smallest vertex of the copy and the walk starts there, so the
    stream is sorted by (v0, gap_order); a walk whose vertices dip below its
    start is a non-canonical presentation of a copy already yielded.
    """
    orders = _distinct_orders(gaps)
    for v in range(n):
        for order in orders:
            vertices = [v]
            mask = 1 << v
            u = v
            ok = True
            for g in order[:-1]:
                u = (u + g) % n
                if u < v:
                    ok = False
                    break
                vertices.append(u)
                mask |= 1 << u
            if ok:
                yield v, order, tuple(vertices), mask


@lru_cache(maxsize=32)
def _copy_table(n: int, gaps: tuple[int, ...]):
    return tuple(_iter_copies(n, gaps))


def _walk_budget(n: int, gaps: tuple[int, ...]) -> int:
    orders = 1
    for i in range(2, len(gaps) + 1):
        orders *= i
    return n * orders


def detect_bruteforce(c: Colouring, inst: DiscreteInstance,
                      restriction: Optional[Iterable[Sequence[int]]] = None,
                      ) -> Optional[CopyWitness]:
    """Scan all permuted copies; return the lexicographically least witness.

    With `restriction` given, only copies whose cyclic gap order is in the
    set are considered.
    """
    if c.n != inst.n:
        raise ValueError(f"colouring has n={c.n} but instance has n={inst.n}")
    rset = _normalize_restriction(restriction)
    red = c.class_mask("R")
    blue = c.class_mask("B")
    if _walk_budget(inst.n, inst.gaps) <= _CACHE_WALK_LIMIT:
        copies = _copy_table(inst.n, tuple(inst.gaps))
    else:
        copies = _iter_copies(inst.n, tuple(inst.gaps))
    for v0, order, vertices, mask in copies:
        if rset is not None and cyclic_canonical(order) not in rset:
            continue
        if mask & red == mask:
            return CopyWitness(vertices, order, _colour_name("R", vertices, c.black))
        if mask & blue == mask:
            return CopyWitness(vertices, order, _colour_name("B", vertices, c.black))
    return None


def _dp_reach(class_mask: int, n: int, table: SubsetSumTable) -> dict[int, int]:
    """Bit-parallel reachability: bit i of reach[l] says an all-in-class
    counterclockwise path exists from i to i+l using exactly the gap subset
    summing to l.  Filled in non-strictly increasing subset size; the final
    entry reach[n] marks start vertices of full monochromatic copies."""
    reach = {0: class_mask}
    for length in table.lengths_by_size():
        acc = 0
        for g in table.values(length):
            acc |= reach[length - g]
        reach[length] = rotate_mask(class_mask, -length, n) & acc
    return reach


def _dp_greedy_order(reach: dict[int, int], n: int, table: SubsetSumTable,
                     start: int) -> tuple[int, ...]:
    """Reconstruct the lexicographically least gap order of a copy at
    `start` by walking forward and keeping the remaining path feasible."""
    order: list[int] = []
    u = start
    remaining = n
    while remaining:
        values = table.values(remaining)
        if len(values) == 1:
            order.append(values[0])
            break
        for g in sorted(values):
            v = (u + g) % n
            if reach[remaining - g] >> v & 1:
                order.append(g)
                u = v
                remaining -= g
                break
        else:
            raise AssertionError("backtracking failed on a reachable start")
    return tuple(order)


def detect_dp(c: Colouring, inst: DiscreteInstance) -> Optional[CopyWitness]:
    """Subset-sum DP detector; identical verdict and witness to brute force.

    Precondition: all 2^k subset sums of the gaps are pairwise distinct
    (raises DuplicateSubsetSumError otherwise).
    """
    if c.n != inst.n:
        raise ValueError(f"colouring has n={c.n} but instance has n={inst.n}")
    table = _subset_table(inst.n, tuple(inst.gaps))
    candidates = []
    for colour, rank in (("R", 0), ("B", 1)):
        reach = _dp_reach(c.class_mask(colour), inst.n, table)
        hits = reach[inst.n]
        if hits:
            start = (hits & -hits).bit_length() - 1
            order = _dp_greedy_order(reach, inst.n, table, start)
            candidates.append((start, order, rank, colour))
    if not candidates:
        return None
    start, order, _, colour = min(candidates)
    vertices = [start]
    for g in order[:-1]:
        vertices.append((vertices[-1] + g) % inst.n)
    return CopyWitness(tuple(vertices), order,
                       _colour_name(colour, vertices, c.black))


def count_copies(c: Colouring, inst: DiscreteInstance) -> tuple[int, int]:
    """Exact (red, blue) counts of monochromatic permuted copies.

    Requires pairwise-distinct gaps (each copy then has one canonical
    enumeration) and no black vertex.
    """
    if c.n != inst.n:
        raise ValueError(f"colouring has n={c.n} but instance has n={inst.n}")
    if len(set(inst.gaps)) != len(inst.gaps):
        raise ValueError(f"count_copies needs pairwise-distinct gaps, got {inst.gaps}")
    if c.black is not None:
        raise ValueError("count_copies does not support a black vertex")
    red_mask = c.red_mask
    blue_mask = c.blue_mask
    red = blue = 0
    if _walk_budget(inst.n, inst.gaps) <= _CACHE_WALK_LIMIT:
        copies = _copy_table(inst.n, tuple(inst.gaps))
    else:
        copies = _iter_copies(inst.n, tuple(inst.gaps))
    for _, _, _, mask in copies:
        if mask & red_mask == mask:
            red += 1
        elif mask & blue_mask == mask:
            blue += 1
    return red, blue


def total_copies(inst: DiscreteInstance) -> int:
    """Number of distinct permuted copies: n (k-1)! for distinct gaps."""
    return sum(1 for _ in _iter_copies(inst.n, tuple(inst.gaps)))


def has_copy_in_class_dp(class_mask: int, inst: DiscreteInstance) -> bool:
    """Single-class DP verdict: does a copy lie entirely in class_mask?

    Same precondition as detect_dp (pairwise-distinct subset sums); cheap
    even for large n since the reachability pass is bit-parallel.
    """
    table = _subset_table(inst.n, tuple(inst.gaps))
    return _dp_reach(class_mask, inst.n, table)[inst.n] != 0


def find_copy_in_class(class_mask: int, n: int, gaps: Sequence[int],
                       starts: Optional[Iterable[int]] = None,
                       ) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Depth-first search for one copy lying entirely inside a colour class.

    Scans starts in order, choosing gaps in ascending value; exhaustive, so
    a None verdict is a proof of absence (for starts=None).  Suited to large
    n where the copy table would not fit.  Returns (vertices, gap_order)
    presented from the copy's smallest vertex.
    """
    k = len(gaps)
    gaps_sorted = sorted(gaps)
    used = [False] * k
    path: list[int] = []

    def extend(u: int) -> bool:
        if len(path) == k - 1:
            return True
        prev = None
        for i in range(k):
            if used[i] or gaps_sorted[i] == prev:
                continue
            g = gaps_sorted[i]
            v = (u + g) % n
            if class_mask >> v & 1:
                used[i] = True
                path.append(g)
                if extend(v):
                    return True
                path.pop()
                used[i] = False
            prev = g
        return False

    for v0 in (range(n) if starts is None else starts):
        if not (class_mask >> v0 & 1):
            continue
        if extend(v0):
            last = next(gaps_sorted[i] for i in range(k) if not used[i])
            order = tuple(path) + (last,)
            vertices = [v0]
            for g in order[:-1]:
                vertices.append((vertices[-1] + g) % n)
            shift = vertices.index(min(vertices))
            return (tuple(vertices[shift:] + vertices[:shift]),
                    order[shift:] + order[:shift])
    return None
