import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cubic_congruence.cubic_ring import EPSILON, EPSILON_INV, CubicInt, cofactor, mul, norm, power
from cubic_congruence.ideal_correspondence import membership, root_to_ideal
from cubic_congruence.parametrization import (
    COEFF_BOUND,
    GammaData,
    NotPrimitive,
    NotUnimodular,
    RationalPoint,
    approximations,
    check_gamma_identity,
    columns_from_points,
    domain_generators_in_box,
    enumerate_gamma_data,
    enumerate_generators,
    gamma_data,
    gamma_matrix,
    generator_from_root,
    in_domain,
    inverse_columns,
    is_primitive_generator,
    recover_from_points,
    recover_root,
    reduce_to_domain,
    root_from_generator,
    shift_uvw,
    solve_uvw,
    _det3,
)
from cubic_congruence.root_finder import DomainError, RootPair, enumerate_root_pairs, roots_fast

from strategies import nonzero_cubic_ints, primitive_generators

ALPHA = CubicInt(1, 1, -1)


def test_is_primitive_examples():
    assert is_primitive_generator(ALPHA)
    assert not is_primitive_generator(CubicInt(2, 0, 0))
    assert is_primitive_generator(CubicInt(1, 0, 0))


def test_in_domain_examples():
    assert in_domain(ALPHA)
    assert not in_domain(CubicInt(1, 0, 1))
    assert not in_domain(mul(EPSILON, ALPHA))
    assert not in_domain(-ALPHA)
    with pytest.raises(ValueError):
        in_domain(CubicInt(0, 0, 0))


def test_reduce_examples():
    assert reduce_to_domain(CubicInt(1, 0, 1)) == ALPHA
    assert reduce_to_domain(ALPHA) == ALPHA
    assert reduce_to_domain(CubicInt(-1, 0, -1)) == ALPHA
    with pytest.raises(ValueError):
        reduce_to_domain(CubicInt(0, 0, 0))


def test_solve_uvw_examples():
    u, v, w = solve_uvw(ALPHA)
    assert 3 * u + v + 2 * w == 1
    assert solve_uvw(CubicInt(1, 0, 0)) == (1, 0, 0)
    u, v, w = solve_uvw(CubicInt(0, -1, 1))
    assert 2 * u + 2 * v + w == 1
    with pytest.raises(NotPrimitive):
        solve_uvw(CubicInt(2, 0, 0))


def test_solve_uvw_deterministic():
    assert solve_uvw(CubicInt(17, -4, 9)) == solve_uvw(CubicInt(17, -4, 9))


def test_root_from_generator_examples():
    assert root_from_generator(ALPHA) == RootPair(5, 3)
    assert root_from_generator(CubicInt(0, -1, 1)) == RootPair(2, 0)
    assert root_from_generator(CubicInt(-1, 1, 0)) == RootPair(1, 0)
    with pytest.raises(NotPrimitive):
        root_from_generator(CubicInt(2, 0, 0))
    with pytest.raises(DomainError):
        root_from_generator(-ALPHA)


def test_generator_from_root_examples():
    assert generator_from_root(RootPair(5, 3)) == ALPHA
    assert generator_from_root(RootPair(1, 0)) == CubicInt(-1, 1, 0)
    assert generator_from_root(RootPair(2, 0)) == CubicInt(0, -1, 1)


def test_enumerate_examples():
    assert enumerate_generators(1) == [(CubicInt(0, -1, 1), RootPair(2, 0))]
    got = enumerate_generators(5)
    assert [p for _, p in got] == [RootPair(6, 2), RootPair(10, 8)]
    for x, p in got:
        assert generator_from_root(p) == x


def test_enumerate_rejects_bad_M():
    with pytest.raises(ValueError):
        enumerate_generators(0)


def test_approximation_examples():
    g = gamma_data(ALPHA, (1, 0, -1))
    assert g.root == RootPair(5, 3)
    p1, p2, p3 = approximations(g)
    assert (p1.n1, p1.n2, p1.den) == (1, -1, 2)
    assert p1.torus() == (Fraction(1, 2), Fraction(1, 2))
    assert (p3.n1, p3.n2, p3.den) == (1, -1, 3)
    assert p3.torus() == (Fraction(1, 3), Fraction(2, 3))
    assert [p.den for p in (p1, p2, p3)] == [2, 1, 3]
    # unit ideal: everything is exactly (0, 0)
    g1 = gamma_data(CubicInt(-1, 1, 0), (1, 0, 0))
    assert g1.root == RootPair(1, 0)
    for p in approximations(g1):
        assert p.den == 1 and p.torus() == (0, 0)


def test_recover_root_examples():
    g = recover_root([(3, -1, 1), (1, 0, 1), (2, -1, 1)])
    assert gamma_matrix(g) == ((1, 1, -1), (0, 1, 1), (-1, -2, 1))
    assert (g.a, g.b, g.c, g.u, g.v, g.w) == (1, 1, -1, 1, 0, -1)
    assert g.root == RootPair(5, 3)
    g1 = gamma_data(CubicInt(-1, 1, 0))
    assert recover_root(columns_from_points(approximations(g1))).root == RootPair(1, 0)
    with pytest.raises(NotUnimodular):
        recover_root([(2, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_recover_root_rejects_wrong_shape():
    with pytest.raises(DomainError):
        recover_root([(1, 0, 0), (1, 1, 0), (0, 0, 1)])


def test_columns_are_inverse_columns():
    for g in enumerate_gamma_data(200):
        assert columns_from_points(approximations(g)) == inverse_columns(g)


def test_gamma_invariants_small():
    for g in enumerate_gamma_data(300):
        x = g.generator
        g1, g2, g3 = cofactor(x)
        assert g.u * g1 + g.v * g2 + g.w * g3 == 1
        assert norm(x) == g.m > 0
        assert _det3(gamma_matrix(g)) == 1
        assert check_gamma_identity(g)
        assert membership(x, root_to_ideal(g.root))


def test_domain_positivity_and_bounds():
    for g in enumerate_gamma_data(2000):
        s = g.m ** (2 / 3)
        for den in cofactor(g.generator):
            assert den > 0
            assert 0.1 * s <= den <= 4 * s
        assert max(abs(g.a), abs(g.b), abs(g.c)) <= COEFF_BOUND * g.m ** (1 / 3)


def test_uniqueness_in_box():
    for m in range(1, 400):
        for nu in roots_fast(m):
            p = RootPair(m, nu)
            assert domain_generators_in_box(p) == [generator_from_root(p)]


def test_uniqueness_sampled_larger():
    rng = random.Random(11)
    pairs = enumerate_root_pairs(1000)
    for p in rng.sample(pairs, 40):
        assert domain_generators_in_box(p) == [generator_from_root(p)]


@given(nonzero_cubic_ints(50))
def test_reduce_lands_in_domain(x):
    y = reduce_to_domain(x)
    assert in_domain(y)
    # same ideal: y / x is a unit
    q = mul(y, cofactor(x).as_cubic())
    n = norm(x)
    assert all(v % n == 0 for v in q)
    assert abs(norm(CubicInt(*(v // n for v in q)))) == 1


@given(nonzero_cubic_ints(50), st.integers(-30, 30))
def test_reduce_ignores_units(x, k):
    assert reduce_to_domain(mul(x, power(EPSILON, k))) == reduce_to_domain(x)
    assert reduce_to_domain(-x) == reduce_to_domain(x)


@given(nonzero_cubic_ints(30))
def test_exactly_one_unit_translate_in_domain(x):
    x = -x if norm(x) < 0 else x
    hits = [k for k in range(-40, 41) if in_domain(mul(x, power(EPSILON, k)))]
    assert len(hits) == 1


@given(primitive_generators())
def test_root_from_any_generator(x):
    p = root_from_generator(x)
    assert (p.nu**3 - 2) % p.m == 0
    assert membership(x, root_to_ideal(p))
    assert root_from_generator(reduce_to_domain(x)) == p


@given(primitive_generators(), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_torus_invariance_under_shift(x, k, l):
    g = gamma_data(x)
    h = shift_uvw(g, k, l)
    assert h.root == g.root
    assert check_gamma_identity(h)
    for p, q in zip(approximations(g), approximations(h)):
        assert p.den == q.den
        assert (q.n1 - p.n1) % p.den == 0 and (q.n2 - p.n2) % p.den == 0
        assert p.same_torus_point(q)


@given(primitive_generators())
def test_recover_round_trip(x):
    g = gamma_data(x)
    assert recover_root(columns_from_points(approximations(g))) == g
    assert recover_from_points(approximations(g)) == g


def test_gamma_data_checks_bezout():
    with pytest.raises(NotPrimitive):
        gamma_data(ALPHA, (0, 0, 0))


def test_rational_point_zero_den():
    with pytest.raises(ZeroDivisionError):
        RationalPoint(1, 1, 0)


def test_big_generator():
    # an element whose cofactors exceed 64 bits
    x = reduce_to_domain(CubicInt(2**40 + 3, 5, -7))
    assert in_domain(x)
    g = gamma_data(x)
    assert abs(max(cofactor(x), key=abs)) > 2**63
    assert check_gamma_identity(g)
    assert recover_root(columns_from_points(approximations(g))) == g


def test_generator_from_root_large_m():
    m = 2**40 + 1
    for nu in roots_fast(m):
        x = generator_from_root(RootPair(m, nu))
        assert in_domain(x) and norm(x) == m
        assert root_from_generator(x) == RootPair(m, nu)
