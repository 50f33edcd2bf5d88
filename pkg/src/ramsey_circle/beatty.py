"""Beatty sequences, partition checking, and balanced periodic words.

A pair of tuples (alphas, betas) induces the integer sequences
floor(alpha_i * n + beta_i) for n = 0, 1, 2, ...; the central question is
whether the k sequences together hit every natural number exactly once.
When they do, reading off which sequence owns each integer yields a word
over {1, ..., k} that is balanced: equal-length windows contain each letter
a number of times differing by at most one.

Both notions concern infinite objects; every checker here works on a
bounded prefix [0, M) and says so.  When all alphas are rational with
common numerator p the word is p-periodic and a prefix of 2p already gives
an exact global verdict, which `fraenkel_diagnostics` reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import power_tuple


@dataclass(frozen=True)
class BeattyPair:
    """Parameters of k Beatty sequences; alphas positive, non-decreasing.

    Equal alphas are allowed (shifted splits such as alphas (2, 2) with
    betas (1, 0) partition perfectly well); the strictly-increasing setting
    of the uniqueness question is enforced by `fraenkel_diagnostics`.
    """

    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(Fraction(b) for b in self.betas))
        if not self.alphas:
            raise ValueError("need at least one alpha")
        if len(self.alphas) != len(self.betas):
            raise ValueError("alphas and betas must have the same length")
        if self.alphas[0] <= 0:
            raise ValueError("alphas must be positive")
        if any(self.alphas[i] > self.alphas[i + 1] for i in range(len(self.alphas) - 1)):
            raise ValueError("alphas must be non-decreasing")

    @classmethod
    def half_shift(cls, alphas: Sequence[Fraction]) -> "BeattyPair":
        """The special case beta_i = alpha_i / 2."""
        alphas = tuple(Fraction(a) for a in alphas)
        return cls(alphas=alphas, betas=tuple(a / 2 for a in alphas))

    @property
    def k(self) -> int:
        return len(self.alphas)

    def is_half_shift(self) -> bool:
        return all(b == a / 2 for a, b in zip(self.alphas, self.betas))

    def common_numerator(self) -> int:
        """lcm of the reduced alpha numerators: the word period length."""
        return math.lcm(*(a.numerator for a in self.alphas))


def power_pair(k: int) -> BeattyPair:
    """The half-shifted pair with alpha_i = (2^k - 1) / 2^(k-i)."""
    denom = 2**k - 1
    return BeattyPair.half_shift(tuple(Fraction(denom, 2**(k - i)) for i in range(1, k + 1)))


def beatty_term(alpha: Fraction, beta: Fraction, n: int) -> int:
    """floor(alpha * n + beta), computed in integer arithmetic."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if n < 0:
        raise ValueError("n must be >= 0")
    num = alpha.numerator * beta.denominator * n + beta.numerator * alpha.denominator
    den = alpha.denominator * beta.denominator
    return num // den


@dataclass(frozen=True)
class PartitionVerdict:
    """Outcome of a bounded partition check.

    kind is "ok", "collision" (value hit by sequences `sequences`, 1-based)
    or "gap" (value hit by nothing).  Collisions are reported in preference
    to gaps; within a kind the smallest value wins.
    """

    kind: str
    value: Optional[int] = None
    sequences: Optional[tuple[int, int]] = None

    @property
    def ok(self) -> bool:
        return self.kind == "ok"


class PartitionError(ValueError):
    """A word was requested from a pair that does not partition [0, M)."""

    def __init__(self, verdict: PartitionVerdict):
        self.verdict = verdict
        if verdict.kind == "collision":
            i, j = verdict.sequences
            msg = f"value {verdict.value} is hit by sequences {i} and {j}"
        else:
            msg = f"value {verdict.value} is hit by no sequence"
        super().__init__(msg)


def _mark_owners(pair: BeattyPair, M: int) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Owner (1-based sequence index, 0 = none) per value in [0, M), plus
    any collisions as (value, earlier_owner, later_owner)."""
    owners = [0] * M
    collisions = []
    for i, (alpha, beta) in enumerate(zip(pair.alphas, pair.betas), start=1):
        a = alpha.numerator * beta.denominator
        b = beta.numerator * alpha.denominator
        den = alpha.denominator * beta.denominator
        n = 0
        while True:
            value = (a * n + b) // den
            if value >= M:
                break
            if value >= 0:
                if owners[value]:
                    collisions.append((value, owners[value], i))
                else:
                    owners[value] = i
            n += 1
    return owners, collisions


def partition_check(pair: BeattyPair, M: int) -> PartitionVerdict:
    """Check the sequences hit every integer in [0, M) exactly once."""
    if M < 1:
        raise ValueError("M must be >= 1")
    owners, collisions = _mark_owners(pair, M)
    if collisions:
        value, i, j = min(collisions)
        return PartitionVerdict(kind="collision", value=value, sequences=(i, j))
    for value, owner in enumerate(owners):
        if not owner:
            return PartitionVerdict(kind="gap", value=value)
    return PartitionVerdict(kind="ok")


def word_from_pair(pair: BeattyPair, M: int) -> tuple[int, ...]:
    """The owner word s_0 ... s_{M-1}; raises PartitionError when the pair
    does not partition [0, M)."""
    if M < 1:
        raise ValueError("M must be >= 1")
    owners, collisions = _mark_owners(pair, M)
    if collisions:
        value, i, j = min(collisions)
        raise PartitionError(PartitionVerdict(kind="collision", value=value, sequences=(i, j)))
    for value, owner in enumerate(owners):
        if not owner:
            raise PartitionError(PartitionVerdict(kind="gap", value=value))
    return tuple(owners)


@dataclass(frozen=True)
class BalancedWord:
    """A periodic word over {1, ..., k}, stored as one period."""

    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "period", tuple(int(s) for s in self.period))
        if not self.period:
            raise ValueError("period must be non-empty")
        letters = set(self.period)
        if letters != set(range(1, max(letters) + 1)):
            raise ValueError(f"letters must be contiguous from 1, got {sorted(letters)}")

    @property
    def k(self) -> int:
        return max(self.period)

    @property
    def period_length(self) -> int:
        return len(self.period)


@dataclass(frozen=True)
class BalanceVerdict:
    balanced: bool
    letter: Optional[int] = None
    window_length: Optional[int] = None
    positions: Optional[tuple[int, int]] = None


def balanced_check(w: BalancedWord) -> BalanceVerdict:
    """Check the balance condition on the periodic word.

    By periodicity it suffices to compare the windows of each length
    l in [1, p] whose start lies in [0, p); the first violating
    (length, letter) is reported with a maximal and a minimal window start.
    """
    p = w.period_length
    ext = w.period + w.period
    prefixes = {}
    for a in range(1, w.k + 1):
        pref = [0] * (2 * p + 1)
        for j, s in enumerate(ext):
            pref[j + 1] = pref[j] + (s == a)
        prefixes[a] = pref
    for length in range(1, p + 1):
        for a in range(1, w.k + 1):
            pref = prefixes[a]
            counts = [pref[s + length] - pref[s] for s in range(p)]
            hi = max(counts)
            lo = min(counts)
            if hi - lo > 1:
                return BalanceVerdict(balanced=False, letter=a, window_length=length,
                                      positions=(counts.index(hi), counts.index(lo)))
    return BalanceVerdict(balanced=True)


def densities(w: BalancedWord) -> tuple[Fraction, ...]:
    """Exact per-period letter frequencies, in letter order; they sum to 1."""
    p = w.period_length
    return tuple(Fraction(sum(1 for s in w.period if s == a), p)
                 for a in range(1, w.k + 1))


@dataclass(frozen=True)
class FraenkelReport:
    """Structural diagnostics of a partitioning half-shifted pair."""

    period_length: int
    period: tuple[int, ...]
    exact: bool                # verdict covers the whole infinite word
    symmetric: bool            # s_m = s_(p-1-m) for all m
    consecutive_ok: tuple[bool, ...]   # per letter: two consecutive
                                       # occurrences with nothing larger between
    densities: tuple[Fraction, ...]
    power_flag: bool           # densities equal the doubling tuple


def _consecutive_condition(word: Sequence[int], letter: int) -> bool:
    positions = [j for j, s in enumerate(word) if s == letter]
    for a, b in zip(positions, positions[1:]):
        if all(word[j] <= letter for j in range(a + 1, b)):
            return True
    return False


def fraenkel_diagnostics(pair: BeattyPair, M: int) -> FraenkelReport:
    """Verify the period structure of a half-shifted partitioning pair.

    Needs beta_i = alpha_i / 2 and M >= 2p where p is the common numerator
    of the alphas; partition failures propagate as PartitionError.
    """
    if not pair.is_half_shift():
        raise ValueError("diagnostics require betas = alphas / 2")
    if any(pair.alphas[i] == pair.alphas[i + 1] for i in range(pair.k - 1)):
        raise ValueError("diagnostics require strictly increasing alphas")
    p = pair.common_numerator()
    if M < 2 * p:
        raise ValueError(f"M={M} too small: need at least 2p = {2 * p}")
    word = word_from_pair(pair, M)
    period = word[:p]
    periodic = all(word[j] == word[j % p] for j in range(M))
    symmetric = period == period[::-1]
    consecutive = tuple(_consecutive_condition(word[:2 * p], a)
                        for a in range(1, pair.k + 1))
    dens = densities(BalancedWord(period)) if set(period) == set(range(1, pair.k + 1)) \
        else tuple(Fraction(sum(1 for s in period if s == a), p) for a in range(1, pair.k + 1))
    power = pair.k >= 3 and dens == power_tuple(pair.k).distances
    return FraenkelReport(period_length=p, period=period,
                          exact=bool(periodic), symmetric=symmetric,
                          consecutive_ok=consecutive, densities=dens,
                          power_flag=power)
