import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coinfrac import GeometricFamilySpec, make_geometric
from coinfrac.enumeration import enumerate_divisions
from coinfrac.errors import DomainError, ResourceLimitError
from coinfrac.ifs import (
    IfsSystem,
    RationalPointSet,
    apply_F,
    construct_inductive,
    generator_set,
    iterate_F,
    origin,
    scale,
)
from oracles import divisions_by_assignment


def F(r, c, s):
    return IfsSystem(r, generator_set(c, s))


def test_generators_unit_vectors():
    assert list(generator_set(1, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert list(generator_set(1, 4)) == [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


def test_generators_c2():
    assert list(generator_set(2, 3)) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


@pytest.mark.parametrize("c, s", list(itertools.product(range(1, 7), range(1, 6))))
def test_generator_count_and_sums(c, s):
    gens = generator_set(c, s)
    assert len(gens) == math.comb(c + s - 1, s - 1)
    if s == 3:
        assert len(gens) == (c + 1) * (c + 2) // 2
    pts = list(gens)
    assert len(set(pts)) == len(pts)
    assert all(sum(p) == c and min(p) >= 0 for p in pts)


def test_generator_domain():
    with pytest.raises(DomainError):
        generator_set(0, 3)
    with pytest.raises(DomainError):
        IfsSystem(1, generator_set(1, 3))


def test_second_level_binary_gasket():
    d = construct_inductive(GeometricFamilySpec(2, 1, 2), 3)
    expected = {(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (0, 3, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3)}
    assert d.as_dict() == {p: 1 for p in expected}
    assert d.as_dict() == divisions_by_assignment([(1, 1), (2, 1)], 3)


def test_first_level_is_unit_vectors():
    d = construct_inductive(GeometricFamilySpec(2, 1, 1), 3)
    assert d.as_dict() == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}


def test_zero_level_is_origin():
    for s in range(1, 5):
        assert construct_inductive(GeometricFamilySpec(3, 2, 0), s).as_dict() == {(0,) * s: 1}


def test_overlapping_family_equals_enumeration():
    spec = GeometricFamilySpec(3, 3, 4)
    built = construct_inductive(spec, 3)
    assert built == enumerate_divisions(make_geometric(spec), 3)
    assert built.max_multiplicity == 9


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(1, 4), st.integers(0, 3), st.integers(1, 4))
def test_oracle_equivalence_sample(r, c, m, s):
    spec = GeometricFamilySpec(r, c, m)
    built = construct_inductive(spec, s)
    assert built == enumerate_divisions(make_geometric(spec), s)
    assert np.all(built.points.sum(axis=1) == c * (r**m - 1) // (r - 1))


def test_construction_cap():
    with pytest.raises(ResourceLimitError):
        construct_inductive(GeometricFamilySpec(2, 1, 8), 3, cap=1000)


def test_scale_first_level():
    k = scale(construct_inductive(GeometricFamilySpec(2, 1, 1), 3), GeometricFamilySpec(2, 1, 1))
    half = Fraction(1, 2)
    assert k.points() == {(half, 0, 0): 1, (0, half, 0): 1, (0, 0, half): 1}


def test_scale_origin():
    spec = GeometricFamilySpec(2, 1, 0)
    assert scale(construct_inductive(spec, 3), spec) == origin(3)


@pytest.mark.parametrize("m", range(1, 8))
def test_scaled_binary_in_unit_interval(m):
    spec = GeometricFamilySpec(2, 1, m)
    k = scale(construct_inductive(spec, 3), spec)
    coords = [x for p in k.points() for x in p]
    assert all(0 <= x < 1 for x in coords)
    assert max(coords) == Fraction(2**m - 1, 2**m)
    assert k.denominator == 2**m


def test_apply_F_once():
    k = apply_F(F(2, 1, 3), origin(3))
    half = Fraction(1, 2)
    assert k == RationalPointSet.from_fractions([(half, 0, 0), (0, half, 0), (0, 0, half)])


@pytest.mark.parametrize("r, c, s", [(2, 1, 3), (3, 2, 3), (5, 4, 4), (3, 3, 3), (2, 3, 2)])
def test_single_point_maps_to_generator_count(r, c, s):
    k = RationalPointSet.from_fractions([tuple(Fraction(i + 1, 7) for i in range(s))])
    assert len(apply_F(F(r, c, s), k)) == len(generator_set(c, s))


@pytest.mark.parametrize(
    "r, c, s, mmax",
    [(2, 1, 3, 7), (3, 2, 3, 4), (3, 3, 3, 4), (4, 2, 2, 5), (2, 2, 4, 3), (5, 1, 1, 3), (3, 1, 2, 8)],
)
def test_F_iterates_equal_scaled_construction(r, c, s, mmax):
    system = F(r, c, s)
    k = origin(s)
    for m in range(mmax + 1):
        spec = GeometricFamilySpec(r, c, m)
        assert k == scale(construct_inductive(spec, s), spec)
        k = apply_F(system, k)
    assert iterate_F(system, origin(s), mmax) == scale(construct_inductive(GeometricFamilySpec(r, c, mmax), s), GeometricFamilySpec(r, c, mmax))


def test_apply_map_is_contraction_step():
    system = F(3, 1, 2)
    assert system.apply_map((1, 0), (Fraction(1, 2), 0)) == (Fraction(1, 2), 0)
    assert system.contraction_factor == Fraction(1, 3)


def test_rational_point_set_equality_is_exact():
    a = RationalPointSet(2, {(2, 4): 1}, 8)
    b = RationalPointSet.from_fractions({(Fraction(1, 4), Fraction(1, 2)): 1})
    assert a == b
    assert a != RationalPointSet(2, {(2, 4): 2}, 8)
    assert hash(a) == hash(b)
    with pytest.raises(DomainError):
        apply_F(F(2, 1, 3), a)
