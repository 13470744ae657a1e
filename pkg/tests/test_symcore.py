from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hwz.symcore import (
    DisjointSet,
    IntPartition,
    Permutation,
    SetPartition,
    bell_number,
    canonical_of_type,
    cycle_type_tuple,
    mobius_to_top,
    orbit_partition,
    partition_list,
    partitions_of_set,
    pochhammer,
    set_partitions,
)


def test_partition_basics():
    p = IntPartition((2, 1, 1))
    assert p.n == 4 and p.length == 3
    assert p.z() == 4  # 2 * 1^2 * 2!
    assert p.class_size() == factorial(4) // 4


def test_partition_list_counts():
    # number of partitions of n = 1..8
    assert [len(partition_list(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


@given(st.integers(min_value=1, max_value=7))
def test_class_sizes_sum_to_group_order(n):
    assert sum(IntPartition(mu).class_size() for mu in partition_list(n)) == factorial(n)


def test_composition_convention():
    # (p * q)(k) = p(q(k))
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    assert (p * q)(2) == p(q(2)) == p(3) == 3
    assert (p * q).images != (q * p).images


def test_canonical_of_type():
    alpha = canonical_of_type((3, 2))
    assert alpha.cycle_type().parts == (3, 2)
    assert alpha.images == (2, 3, 1, 5, 4)


@st.composite
def permutations_st(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    imgs = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(tuple(imgs))


@given(permutations_st())
def test_inverse_roundtrip(p):
    ident = Permutation.identity(p.n)
    assert p * p.inverse() == ident
    assert p.inverse().cycle_type() == p.cycle_type()


@given(permutations_st(), st.data())
def test_transposition_changes_cycle_count_by_one(p, data):
    if p.n < 2:
        return
    b = data.draw(st.integers(min_value=2, max_value=p.n))
    a = data.draw(st.integers(min_value=1, max_value=b - 1))
    t = Permutation.transposition(p.n, a, b)
    assert abs((p * t).num_cycles - p.num_cycles) == 1


def test_bell_numbers():
    assert [bell_number(n) for n in range(0, 6)] == [1, 1, 2, 5, 15, 52]


def test_set_partition_refinement():
    fine = SetPartition([(1,), (2,), (3,)])
    coarse = SetPartition([(1, 2, 3)])
    mid = SetPartition([(1, 2), (3,)])
    assert fine <= mid <= coarse
    assert not (coarse <= mid)


def test_partitions_of_set_relabels_items():
    items = ("a", "b")
    got = sorted(partitions_of_set(items))
    assert got == [(("a",), ("b",)), (("a", "b"),)]


def test_mobius_to_top():
    assert [mobius_to_top(k) for k in (1, 2, 3, 4)] == [1, -1, 2, -6]


def test_disjoint_set_undo():
    ds = DisjointSet(4)
    ds.union(1, 2)
    assert ds.ncomp == 3
    ds.union(3, 4)
    ds.undo()
    assert ds.ncomp == 3
    ds.undo()
    assert ds.ncomp == 4


def test_orbit_partition():
    p = Permutation.from_cycles(4, [(1, 2)])
    q = Permutation.from_cycles(4, [(3, 4)])
    blocks = orbit_partition([p, q], 4)
    assert blocks.num_blocks == 2


def test_pochhammer():
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(-2, 4) == 0  # terminates past zero
