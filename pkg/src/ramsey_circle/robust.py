"""Suitable parameters for triples, and finite wildcard forcing checks.

t is suitable for a triple when the uniform colouring c_t contains no
monochromatic copy of it, and strongly suitable when additionally no
2 t d_i is an odd integer (the parity condition that keeps copies away
from the arc endpoints, where both colours accumulate).  The search space
is restricted to T = {t : no denominator q_i divides 2t}; a denominator of
2 empties T outright.

`nearly_ramsey_finite_check` exhausts every two-colouring of Z_N minus one
black wildcard vertex and confirms that some copy avoids red or avoids
blue entirely, which is the finite core of the forcing arguments for the
known nearly-Ramsey triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Colouring, DiscreteInstance, DistanceTuple
from .detector import _copy_table
from .uniform import uniform_contains_mono_copy


@dataclass(frozen=True)
class TripleAnalysis:
    """Denominator data driving the strongly-suitable search for a triple."""

    d: DistanceTuple

    def __post_init__(self):
        if self.d.k != 3:
            raise ValueError(f"triple analysis needs k = 3, got k = {self.d.k}")

    @property
    def denominators(self) -> tuple[int, int, int]:
        return self.d.denominators

    def in_t_set(self, t: int) -> bool:
        """Whether t is in T, i.e. no q_i divides 2t."""
        return all(2 * t % q for q in self.denominators)

    @property
    def t_set_empty(self) -> bool:
        # q_i = 2 divides every 2t (q_i = 1 cannot occur: each d_i < 1).
        return any(q == 2 for q in self.denominators)


def is_suitable(d: DistanceTuple, t: int) -> bool:
    """c_t contains no monochromatic copy of d."""
    return not uniform_contains_mono_copy(d, t)


def _odd_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator % 2 == 1


def is_strongly_suitable(d: DistanceTuple, t: int) -> bool:
    """Suitable, and no 2 t d_i is an odd integer."""
    if d.k != 3:
        raise ValueError(f"strong suitability is defined for triples, got k = {d.k}")
    if any(_odd_integer(2 * t * di) for di in d.distances):
        return False
    return is_suitable(d, t)


def strongly_suitable_search(d: DistanceTuple, max_t: int) -> Optional[int]:
    """Smallest strongly-suitable t <= max_t within T, or None.

    None is returned both when T is empty (see TripleAnalysis.t_set_empty)
    and when the sweep is exhausted.
    """
    analysis = TripleAnalysis(d)
    if analysis.t_set_empty:
        return None
    for t in range(1, max_t + 1):
        if analysis.in_t_set(t) and is_strongly_suitable(d, t):
            return t
    return None


@dataclass(frozen=True)
class FiniteCheckResult:
    verified: bool
    counterexample: Optional[Colouring]
    colourings_checked: int


#: The triples known to be nearly-Ramsey: the k=3 doubling tuple, three
#: sporadic triples, and everything with d1 = 1/2.
KNOWN_NEARLY_RAMSEY = (
    (Fraction(4, 7), Fraction(2, 7), Fraction(1, 7)),
    (Fraction(5, 8), Fraction(1, 4), Fraction(1, 8)),
    (Fraction(3, 4), Fraction(1, 6), Fraction(1, 12)),
    (Fraction(7, 12), Fraction(1, 4), Fraction(1, 6)),
)


def is_claimed_nearly_ramsey(d: DistanceTuple) -> bool:
    """Whether the finite forcing check is expected to verify for d.

    For these triples a counterexample at any fitting N contradicts the
    forcing argument (the base polygon embeds in every valid grid), so it
    must be reported as a refutation, not a routine negative.
    """
    if d.k != 3:
        return False
    return d.distances[0] == Fraction(1, 2) or d.distances in KNOWN_NEARLY_RAMSEY


def nearly_ramsey_finite_check(d: DistanceTuple, N: int) -> FiniteCheckResult:
    """Exhaust all two-colourings of Z_N with vertex 0 black.

    Verified means every such colouring contains a copy of d whose vertices
    are all red-or-black or all blue-or-black.  Fixing the black vertex at 0
    loses nothing: rotations act transitively on Z_N.  d must discretise on
    Z_N exactly.
    """
    if d.k != 3:
        raise ValueError(f"finite check is defined for triples, got k = {d.k}")
    gaps = []
    for di in d.distances:
        g = di * N
        if g.denominator != 1:
            raise ValueError(f"distance {di} does not fit Z_{N}")
        gaps.append(int(g))
    inst = DiscreteInstance(n=N, gaps=tuple(gaps))
    masks = [entry[3] for entry in _copy_table(N, inst.gaps)]
    full_rest = (1 << N) - 2   # vertices 1..N-1
    for bits in range(1 << (N - 1)):
        red = bits << 1
        red_class = red | 1
        blue_class = (full_rest ^ red) | 1
        for mask in masks:
            if mask & red_class == mask or mask & blue_class == mask:
                break
        else:
            return FiniteCheckResult(verified=False,
                                     counterexample=Colouring(n=N, red_mask=red, black=0),
                                     colourings_checked=bits + 1)
    return FiniteCheckResult(verified=True, counterexample=None,
                             colourings_checked=1 << (N - 1))
