"""Data model: exact tuples, discretisation, colouring file format."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ramsey_circle.core import (Colouring, DiscreteInstance, DistanceTuple,
                                KtuplePower, ParseError, discretize,
                                parse_colouring, parse_fraction,
                                parse_fraction_list, power_tuple,
                                serialize_colouring)


def test_power_tuple_k3():
    assert power_tuple(3).distances == (F(4, 7), F(2, 7), F(1, 7))


def test_power_tuple_k4():
    assert power_tuple(4).distances == (F(8, 15), F(4, 15), F(2, 15), F(1, 15))


def test_power_tuple_k10_sums_to_one_exactly():
    assert sum(power_tuple(10).distances) == 1


def test_power_tuple_rejects_small_k():
    with pytest.raises(ValueError):
        power_tuple(2)


@pytest.mark.parametrize("k", range(3, 21))
def test_power_tuples_sum_to_one_and_decrease(k):
    d = power_tuple(k).distances
    assert sum(d) == 1
    assert all(a > b for a, b in zip(d, d[1:]))


def test_discretize_power3():
    inst = discretize(power_tuple(3))
    assert (inst.n, inst.gaps) == (7, (4, 2, 1))


def test_discretize_multiplier():
    inst = discretize(power_tuple(3), 2)
    assert (inst.n, inst.gaps) == (14, (8, 4, 2))


def test_discretize_mixed_denominators():
    inst = discretize(DistanceTuple((F(1, 2), F(1, 3), F(1, 6))))
    assert (inst.n, inst.gaps) == (6, (3, 2, 1))


@pytest.mark.parametrize("k", range(3, 11))
def test_power_instance_subset_sums_distinct(k):
    inst = KtuplePower(k).instance
    assert inst.n == 2**k - 1
    assert inst.gaps == tuple(2**(k - 1 - i) for i in range(k))
    sums = set()
    for bits in range(1 << k):
        s = sum(g for i, g in enumerate(inst.gaps) if bits >> i & 1)
        assert s not in sums
        sums.add(s)
    assert sums == set(range(2**k))


def test_distance_tuple_validation():
    with pytest.raises(ValueError):
        DistanceTuple((F(1, 2), F(1, 2)))                      # k < 3
    with pytest.raises(ValueError):
        DistanceTuple((F(1, 3), F(1, 3), F(1, 4)))             # sum != 1
    with pytest.raises(ValueError):
        DistanceTuple((F(1, 6), F(1, 3), F(1, 2)))             # not sorted
    with pytest.raises(ValueError):
        DistanceTuple((F(3, 2), F(-1, 4), F(-1, 4)))           # not positive


def test_discrete_instance_validation():
    with pytest.raises(ValueError):
        DiscreteInstance(n=7, gaps=(4, 2))
    with pytest.raises(ValueError):
        DiscreteInstance(n=7, gaps=(4, 2, 0, 1))


def test_parse_fraction():
    assert parse_fraction("4/7") == F(4, 7)
    assert parse_fraction("-9/10") == F(-9, 10)
    assert parse_fraction("3") == 3
    assert parse_fraction_list("4/7,2/7,1/7") == (F(4, 7), F(2, 7), F(1, 7))


@pytest.mark.parametrize("bad", ["0.5", "1/0", "sqrt2", "", "1/2/3"])
def test_parse_fraction_rejects_inexact(bad):
    with pytest.raises(ParseError):
        parse_fraction(bad)


def test_parse_colouring_basic():
    c = parse_colouring("7\nRRRRBBB\n")
    assert c.n == 7
    assert [c.colour_char(v) for v in range(7)] == list("RRRRBBB")
    assert c.black is None


def test_parse_colouring_black_marker():
    c = parse_colouring("6\nRRRBBB\nblack 0\n")
    assert c.black == 0
    assert c.class_mask("R") & 1
    assert c.class_mask("B") & 1


def test_parse_colouring_length_mismatch():
    with pytest.raises(ParseError) as exc:
        parse_colouring("7\nRRRRBB\n")
    assert exc.value.line == 2


def test_parse_colouring_bad_character():
    with pytest.raises(ParseError) as exc:
        parse_colouring("3\nRXB\n")
    assert (exc.value.line, exc.value.column) == (2, 2)


def test_parse_colouring_bad_n():
    with pytest.raises(ParseError) as exc:
        parse_colouring("0\n\n")
    assert exc.value.line == 1


def test_round_trip_all_sizes():
    rng = random.Random(0)
    for n in range(1, 1001):
        c = Colouring.random(n, rng)
        assert parse_colouring(serialize_colouring(c)) == c


@given(st.integers(min_value=1, max_value=200), st.randoms(use_true_random=False))
def test_round_trip_with_black(n, rng):
    c = Colouring(n=n, red_mask=rng.getrandbits(n), black=rng.randrange(n))
    assert parse_colouring(serialize_colouring(c)) == c


def test_rotation_composes():
    rng = random.Random(1)
    c = Colouring.random(40, rng)
    assert c.rotated(13).rotated(27) == c
    assert c.rotated(0) == c


def test_swap_involution():
    rng = random.Random(2)
    c = Colouring.random(17, rng)
    assert c.swapped().swapped() == c
    assert c.swapped().red_mask == c.blue_mask
