"""Suitability of uniform parameters and finite wildcard forcing."""

import random
from fractions import Fraction as F

import pytest

from ramsey_circle.core import DistanceTuple, power_tuple
from ramsey_circle.robust import (TripleAnalysis, is_strongly_suitable,
                                  is_suitable, nearly_ramsey_finite_check,
                                  strongly_suitable_search)

HALF_THIRD_SIXTH = DistanceTuple((F(1, 2), F(1, 3), F(1, 6)))
EQUILATERAL = DistanceTuple((F(1, 3), F(1, 3), F(1, 3)))
NEARLY_RAMSEY = [
    DistanceTuple((F(5, 8), F(1, 4), F(1, 8))),
    DistanceTuple((F(3, 4), F(1, 6), F(1, 12))),
    DistanceTuple((F(7, 12), F(1, 4), F(1, 6))),
]


def test_suitable_examples():
    assert is_suitable(HALF_THIRD_SIXTH, 1)
    assert not is_suitable(power_tuple(3), 1)
    assert is_suitable(EQUILATERAL, 1)


def test_strongly_suitable_examples():
    assert is_strongly_suitable(EQUILATERAL, 1)
    assert not is_strongly_suitable(DistanceTuple((F(1, 2), F(1, 4), F(1, 4))), 1)


def test_power_never_suitable_small_sweep():
    d = power_tuple(3)
    for t in range(1, 40):
        assert not is_suitable(d, t)
        assert not is_strongly_suitable(d, t)


def test_strong_equals_suitable_and_parity():
    # the two sides of the equivalence, computed independently
    rng = random.Random(53)
    pool = [EQUILATERAL, HALF_THIRD_SIXTH, power_tuple(3),
            DistanceTuple((F(2, 5), F(2, 5), F(1, 5))),
            DistanceTuple((F(5, 12), F(1, 3), F(1, 4))),
            DistanceTuple((F(5, 9), F(1, 3), F(1, 9)))]
    for d in pool:
        for t in rng.sample(range(1, 101), 25):
            parity_ok = all((2 * t * di).denominator > 1 or (2 * t * di).numerator % 2 == 0
                            for di in d.distances)
            assert is_strongly_suitable(d, t) == (is_suitable(d, t) and parity_ok)


def test_t_set_empty_for_half_denominator():
    analysis = TripleAnalysis(HALF_THIRD_SIXTH)
    assert analysis.t_set_empty
    assert strongly_suitable_search(HALF_THIRD_SIXTH, 100) is None


def test_search_finds_t_for_two_fifths_triple():
    d = DistanceTuple((F(2, 5), F(2, 5), F(1, 5)))
    t = strongly_suitable_search(d, 100)
    assert t == 1
    assert TripleAnalysis(d).in_t_set(t)
    assert is_strongly_suitable(d, t)


def test_search_cross_validates_against_per_t_checks():
    d = DistanceTuple((F(5, 9), F(1, 3), F(1, 9)))
    analysis = TripleAnalysis(d)
    found = strongly_suitable_search(d, 30)
    by_hand = next((t for t in range(1, 31)
                    if analysis.in_t_set(t) and is_strongly_suitable(d, t)), None)
    assert found == by_hand


def test_nearly_ramsey_triples_have_no_strongly_suitable_t_small():
    # full range to 500 lives in the acceptance suite
    for d in NEARLY_RAMSEY + [power_tuple(3)]:
        assert strongly_suitable_search(d, 60) is None


def test_finite_check_eighth_gon():
    result = nearly_ramsey_finite_check(NEARLY_RAMSEY[0], 8)
    assert result.verified
    assert result.colourings_checked == 128


def test_finite_check_twelve_gons():
    for d in NEARLY_RAMSEY[1:]:
        result = nearly_ramsey_finite_check(d, 12)
        assert result.verified
        assert result.colourings_checked == 2048


def test_finite_check_needs_fitting_grid():
    with pytest.raises(ValueError):
        nearly_ramsey_finite_check(NEARLY_RAMSEY[0], 9)


def test_finite_check_reports_counterexamples():
    # (1/3, 1/3, 1/3) is not nearly-Ramsey: both triangles of Z_6 can
    # avoid a colour even with a wildcard at 0
    result = nearly_ramsey_finite_check(EQUILATERAL, 6)
    assert not result.verified
    c = result.counterexample
    assert c is not None and c.black == 0
    gaps = (2, 2, 2)
    for start in range(6):
        vertices = [start, (start + 2) % 6, (start + 4) % 6]
        red_ok = all(c.class_mask("R") >> v & 1 for v in vertices)
        blue_ok = all(c.class_mask("B") >> v & 1 for v in vertices)
        assert not red_ok and not blue_ok


@pytest.mark.parametrize("d,n", [
    ((F(1, 2), F(1, 3), F(1, 6)), 6),
    ((F(1, 2), F(1, 4), F(1, 4)), 4),
    ((F(1, 2), F(2, 5), F(1, 10)), 10),
    ((F(1, 2), F(3, 10), F(1, 5)), 10),
    ((F(1, 2), F(5, 12), F(1, 12)), 12),
])
def test_half_family_verified_on_minimal_grid(d, n):
    # d1 = 1/2: the four-point pigeonhole argument, checked exhaustively
    result = nearly_ramsey_finite_check(DistanceTuple(d), n)
    assert result.verified
