"""Uniform colourings and the residue test for red copies inside them.

The uniform colouring with parameter t splits the circle into 2t equal
arcs coloured alternately red and blue, each arc containing its clockwise
endpoint.  Rotating it by one arc swaps the colours, so it contains a
monochromatic copy of a tuple iff it contains a red one.

For the doubling tuple on the grid 2t(2^k - 1), reducing vertex indices
modulo 2^(k+1) - 2 turns red-copy existence into a purely arithmetic
question: order the k jump residues 2t, 4t, ..., 2^k t so that every
partial position stays inside the red residue window {0, ..., 2^k - 2}.
Because the position after a prefix depends only on the set of jumps used,
a memoised search over the 2^k subsets decides this without touching k!
orderings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import Colouring, DiscreteInstance, DistanceTuple, RefutationError
from .detector import find_copy_in_class, has_copy_in_class_dp, DuplicateSubsetSumError


def uniform_colouring(t: int, grid: int) -> Colouring:
    """The alternating 2t-arc colouring on Z_grid, starting red at vertex 0.

    Vertex v is red iff floor(v * 2t / grid) is even; 2t must divide grid.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if grid < 1 or grid % (2 * t):
        raise ValueError(f"grid {grid} is not a positive multiple of 2t = {2 * t}")
    block = grid // (2 * t)
    red_block = (1 << block) - 1
    mask = 0
    for b in range(0, 2 * t, 2):
        mask |= red_block << (b * block)
    return Colouring(n=grid, red_mask=mask)


@dataclass(frozen=True)
class JumpResult:
    """Nearest-integer jump counts round(t * d_i), or the first blocked index.

    t * d_i being exactly a half-integer blocks index i (1-based): an arc of
    that length cannot have both endpoints the same colour in c_t, so no
    monochromatic copy exists at this t.
    """

    t: int
    counts: Optional[tuple[int, ...]]
    blocked_index: Optional[int] = None

    @property
    def blocked(self) -> bool:
        return self.blocked_index is not None

    @property
    def identity_holds(self) -> bool:
        return self.counts is not None and sum(self.counts) == self.t


def jump_counts(d: DistanceTuple, t: int) -> JumpResult:
    """Round each t * d_i to the nearest integer, exactly."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    counts = []
    for i, di in enumerate(d.distances, start=1):
        p, q = di.numerator, di.denominator
        num = 2 * t * p + q
        if num % (2 * q) == 0:
            return JumpResult(t=t, counts=None, blocked_index=i)
        counts.append(num // (2 * q))
    return JumpResult(t=t, counts=tuple(counts))


@dataclass(frozen=True)
class ResidueInstance:
    """The modular data of the red-copy question for the doubling tuple.

    jumps are the residues 2t, 4t, ..., 2^k t modulo m = 2^(k+1) - 2; the
    signed values fold residues above 2^k - 1 into negatives, and describe
    how a vertex moves inside the red window {0, ..., 2^k - 2}.
    """

    k: int
    t: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"k must be >= 3, got {self.k}")
        if self.t < 1:
            raise ValueError("t must be a positive integer")

    @property
    def m(self) -> int:
        return 2 ** (self.k + 1) - 2

    @property
    def window(self) -> int:
        """Red residues are exactly {0, ..., window - 1}."""
        return 2 ** self.k - 1

    @property
    def jumps(self) -> tuple[int, ...]:
        return tuple((2 ** i * self.t) % self.m for i in range(1, self.k + 1))

    @property
    def signed(self) -> tuple[int, ...]:
        out = []
        for u in self.jumps:
            if u == self.window:
                # Impossible: jumps are even, 2^k - 1 is odd and m is even.
                raise RefutationError(
                    f"jump residue {u} equals 2^k - 1 for k={self.k}, t={self.t}")
            out.append(u if u < self.window else u - self.m)
        signed = tuple(out)
        if sum(signed) != 0:
            raise RefutationError(
                f"signed jumps {signed} do not sum to 0 for k={self.k}, t={self.t}")
        return signed


@dataclass(frozen=True)
class ResidueWitness:
    """An order of the jumps keeping every position in the red window."""

    start_residue: int
    jump_order: tuple[int, ...]   # 0-based indices into ResidueInstance.jumps
    positions: tuple[int, ...]    # residue after each jump, mod m
    instance: ResidueInstance

    @property
    def added_jumps(self) -> tuple[int, ...]:
        return tuple(self.instance.jumps[i] for i in self.jump_order)

    @property
    def subset_chain(self) -> tuple[frozenset, ...]:
        chain = []
        used: set[int] = set()
        for i in self.jump_order:
            used.add(i)
            chain.append(frozenset(used))
        return tuple(chain)


@lru_cache(maxsize=65536)
def window_order(sorted_values: tuple[int, ...], window: int) -> Optional[tuple[int, ...]]:
    """Order a zero-sum multiset so every prefix sum lies in [0, window).

    Memoised on the used subset: the prefix sum after a subset is the same
    for every ordering of it.  Returns the least feasible value sequence.
    """
    k = len(sorted_values)
    failed: set[int] = set()
    used = [False] * k
    out: list[int] = []

    def extend(total: int, used_bits: int) -> bool:
        if len(out) == k:
            return True
        if used_bits in failed:
            return False
        prev = None
        for i in range(k):
            if used[i] or sorted_values[i] == prev:
                continue
            v = sorted_values[i]
            if 0 <= total + v < window:
                used[i] = True
                out.append(v)
                if extend(total + v, used_bits | (1 << i)):
                    return True
                out.pop()
                used[i] = False
            prev = v
        failed.add(used_bits)
        return False

    return tuple(out) if extend(0, 0) else None


def _indices_for_value_order(values: tuple[int, ...], order: tuple[int, ...]) -> tuple[int, ...]:
    taken = [False] * len(values)
    idx = []
    for v in order:
        i = next(j for j, w in enumerate(values) if w == v and not taken[j])
        taken[i] = True
        idx.append(i)
    return tuple(idx)


def residue_check(k: int, t: int) -> Optional[ResidueWitness]:
    """Decide red-copy existence in the uniform colouring arithmetically.

    A start residue r and a growing chain of jump subsets keep all positions
    red iff some ordering of the signed jumps has all prefix sums in
    [0, 2^k - 1): any red walk, restarted at its minimal position, yields
    one, so r = 0 can be reported whenever a witness exists at all.
    """
    inst = ResidueInstance(k=k, t=t)
    signed = inst.signed
    order_values = window_order(tuple(sorted(signed)), inst.window)
    if order_values is None:
        return None
    jump_order = _indices_for_value_order(signed, order_values)
    positions = []
    pos = 0
    for i in jump_order:
        pos = (pos + inst.jumps[i]) % inst.m
        positions.append(pos)
    return ResidueWitness(start_residue=0, jump_order=jump_order,
                          positions=tuple(positions), instance=inst)


def _uniform_discretization(d: DistanceTuple, t: int) -> tuple[Colouring, DiscreteInstance]:
    grid = math.lcm(2 * t, d.lcm_denominator())
    gaps = tuple(int(di * grid) for di in d.distances)
    return uniform_colouring(t, grid), DiscreteInstance(n=grid, gaps=gaps)


def uniform_contains_mono_copy(d: DistanceTuple, t: int) -> bool:
    """Whether the discretised uniform colouring c_t contains a
    monochromatic copy of d; by colour-swap symmetry, checking red suffices."""
    c, inst = _uniform_discretization(d, t)
    try:
        return has_copy_in_class_dp(c.red_mask, inst)
    except DuplicateSubsetSumError:
        # Repeated gaps: fall back to the exhaustive search, restricted to
        # one colour period of c_t (rotation by the period fixes c_t).
        period = inst.n // t
        return find_copy_in_class(c.red_mask, inst.n, inst.gaps,
                                  starts=range(period)) is not None


def nonpower_witness(d: DistanceTuple, max_t: int) -> Optional[int]:
    """Smallest t <= max_t whose uniform colouring has no monochromatic copy.

    The jump identity gives a fast negative: a blocked index or a count sum
    differing from t already rules out monochromatic copies at this t.  For
    the doubling tuple no witness exists at any bound; finding one would
    overturn the verified small cases, so it is raised, never returned.
    """
    is_power = d.is_power()
    for t in range(1, max_t + 1):
        jr = jump_counts(d, t)
        if jr.blocked or not jr.identity_holds:
            no_copy = True
        else:
            no_copy = not uniform_contains_mono_copy(d, t)
        if no_copy:
            if is_power:
                raise RefutationError(
                    f"uniform colouring c_{t} contains no monochromatic copy of "
                    f"the k={d.k} doubling tuple; this contradicts the verified "
                    "small cases and should be treated as a bug until proven")
            return t
    return None
