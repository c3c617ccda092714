import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cubic_congruence.parametrization import approximations, enumerate_gamma_data, gamma_data
from cubic_congruence.cubic_ring import CubicInt
from cubic_congruence.root_finder import RootPair, enumerate_root_pairs
from cubic_congruence.torus_geometry import (
    Lattice2,
    TorsionPoint,
    TorusPoint,
    approx_lattices,
    disc_count_stats,
    gauss_reduce,
    in_line_lattice,
    line_lattice,
    max_disc_count_exact,
    min_line_norm,
    min_line_norm_sq,
    root_points,
    torsion_distance_sq,
    torsion_spacing_bound,
    torus_distance,
    torus_distance_sup,
)


def _same_lattice(l1: Lattice2, l2: Lattice2) -> bool:
    return abs(l1.det()) == abs(l2.det()) and l1.contains(l2.v1) and l1.contains(l2.v2)


def _shortest_bruteforce(lat: Lattice2) -> int:
    # a reduced basis has |coords| of the shortest vector bounded by
    # |v1||v2|/|det|; search that box exhaustively in basis coordinates
    n1 = math.hypot(*lat.v1)
    n2 = math.hypot(*lat.v2)
    best = min(lat.v1[0] ** 2 + lat.v1[1] ** 2, lat.v2[0] ** 2 + lat.v2[1] ** 2)
    lim = math.ceil(n1 * n2 / abs(lat.det())) + 1
    for i in range(-lim, lim + 1):
        for j in range(0, lim + 1):
            if i == 0 and j == 0:
                continue
            x = i * lat.v1[0] + j * lat.v2[0]
            y = i * lat.v1[1] + j * lat.v2[1]
            best = min(best, x * x + y * y)
    return best


def test_torus_distance_examples():
    assert torus_distance(TorusPoint(0, 0), TorusPoint(0.5, 0.5)) == pytest.approx(math.sqrt(2) / 2)
    assert torus_distance(TorusPoint(0.9, 0), TorusPoint(0.1, 0)) == pytest.approx(0.2)
    p = TorusPoint(0.3, 0.7)
    assert torus_distance(p, p) == 0
    assert torus_distance_sup(TorusPoint(Fraction(9, 10), 0), TorusPoint(Fraction(1, 10), Fraction(1, 5))) == Fraction(1, 5)


def test_torsion_point_normalisation():
    assert TorsionPoint(2, 4, 6) == TorsionPoint(1, 2, 3)
    assert TorsionPoint(-1, 5, 3) == TorsionPoint(2, 2, 3)
    with pytest.raises(ValueError):
        TorsionPoint(0, 0, 0)


def test_line_lattice_examples():
    assert abs(line_lattice(TorsionPoint(0, 0, 1)).det()) == 1
    l3 = line_lattice(TorsionPoint(1, 2, 3))
    assert abs(l3.det()) == 3
    assert _same_lattice(l3, Lattice2((3, 0), (1, 1)))
    l2 = line_lattice(TorsionPoint(1, 1, 2))
    assert abs(l2.det()) == 2
    assert _same_lattice(l2, Lattice2((2, 0), (1, 1)))


def test_gauss_reduce_examples():
    v, _ = gauss_reduce(Lattice2((1, -1), (1, 1)))
    assert v[0] ** 2 + v[1] ** 2 == 2
    v, _ = gauss_reduce(Lattice2((1, 0), (0, 1)))
    assert v[0] ** 2 + v[1] ** 2 == 1
    v, _ = gauss_reduce(Lattice2((3, 0), (1, 1)))
    assert v in ((1, 1), (-1, -1))


def test_min_line_norm_examples():
    assert min_line_norm(TorsionPoint(0, 0, 1)) == 1
    assert min_line_norm(TorsionPoint(1, 1, 2)) == pytest.approx(math.sqrt(2))
    assert min_line_norm(TorsionPoint(1, 2, 3)) == pytest.approx(math.sqrt(2))


def test_spacing_bound_examples():
    assert torsion_spacing_bound(TorsionPoint(1, 2, 3), 3) == pytest.approx(math.sqrt(2) / 9)
    for Q in (1, 2, 5, 12):
        assert torsion_spacing_bound(TorsionPoint(0, 0, 1), Q) == pytest.approx(1 / Q)
    assert torsion_spacing_bound(TorsionPoint(1, 1, 2), 2) == pytest.approx(math.sqrt(2) / 4)
    with pytest.raises(ValueError):
        torsion_spacing_bound(TorsionPoint(0, 0, 1), 0)


def test_spacing_bound_one_third_against_small_torsion():
    # Q = 3 covers the points of torsion 1 and 3 only; a ninth such as
    # (4/9, 2/3) is closer than sqrt(2)/9 but lies outside the claim
    t = TorsionPoint(1, 2, 3)
    bound_sq = Fraction(min_line_norm_sq(t), (3 * 3) ** 2)
    assert bound_sq == Fraction(2, 81)
    others = [TorsionPoint(r, s, q) for q in (1, 2, 3) for r in range(q) for s in range(q)]
    assert min(torsion_distance_sq(t, u) for u in others if u != t) >= bound_sq
    assert torsion_distance_sq(t, TorsionPoint(4, 6, 9)) < bound_sq


def test_line_lattice_membership_exhaustive():
    rng = random.Random(5)
    for _ in range(120):
        q = rng.randint(1, 50)
        t = TorsionPoint(rng.randrange(q), rng.randrange(q), q)
        lat = line_lattice(t)
        for A in range(-q, q + 1):
            for B in range(-q, q + 1):
                assert lat.contains((A, B)) == in_line_lattice(t, (A, B)), (t, A, B)


def test_line_lattice_index():
    for q in range(1, 30):
        for r in range(q):
            for s in range(q):
                t = TorsionPoint(r, s, q)
                assert abs(line_lattice(t).det()) == t.q


def test_gauss_reduce_matches_exhaustive_search():
    rng = random.Random(17)
    done = 0
    while done < 1000:
        v1 = (rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        v2 = (rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        if v1[0] * v2[1] - v1[1] * v2[0] == 0:
            continue
        lat = Lattice2(v1, v2)
        s, (b1, b2) = gauss_reduce(lat)
        assert s[0] ** 2 + s[1] ** 2 == _shortest_bruteforce(lat)
        assert _same_lattice(lat, Lattice2(b1, b2))
        done += 1


@given(st.integers(1, 10**40), st.data())
def test_gauss_reduce_big(q, data):
    r = data.draw(st.integers(0, q - 1))
    s = data.draw(st.integers(0, q - 1))
    t = TorsionPoint(r, s, q)
    v, (b1, b2) = gauss_reduce(line_lattice(t))
    assert in_line_lattice(t, v)
    # Hermite bound for rank 2
    assert v[0] ** 2 + v[1] ** 2 <= 2 * t.q / math.sqrt(3) + 1e-9 * t.q
    assert abs(b1[0] * b2[1] - b1[1] * b2[0]) == t.q


def _all_torsion(Q):
    pts = set()
    for q in range(1, Q + 1):
        for r in range(q):
            for s in range(q):
                pts.add(TorsionPoint(r, s, q))
    return sorted(pts, key=lambda t: (t.q, t.r, t.s))


def test_torsion_spacing_exhaustive():
    # |t - t1| >= min_line_norm(t) / (q q1) for all distinct pairs, q, q1 <= 12,
    # compared exactly as squares of rationals
    pts = _all_torsion(12)
    norms = {t: min_line_norm_sq(t) for t in pts}
    for t, t1 in itertools.permutations(pts, 2):
        assert torsion_distance_sq(t, t1) * (t.q * t1.q) ** 2 >= norms[t], (t, t1)


def test_approx_lattice_examples():
    g = gamma_data(CubicInt(1, 1, -1), (1, 0, -1))
    l1, l2, l3 = approx_lattices(g)
    assert _same_lattice(l1, Lattice2((1, -1), (1, 1)))
    assert abs(l1.det()) == 2
    assert _same_lattice(l3, Lattice2((1, 1), (-2, 1)))
    assert abs(l3.det()) == 3


def test_approx_lattices_are_line_lattices():
    for g in enumerate_gamma_data(300):
        for p, lat in zip(approximations(g), approx_lattices(g)):
            assert lat.det() != 0
            assert abs(lat.det()) == abs(p.den)
            assert _same_lattice(line_lattice(TorsionPoint.from_rational(p)), lat)


def test_disc_examples():
    assert disc_count_stats([TorusPoint(0.2, 0.2)], 0.01).max_count == 1
    r = 0.01
    s = disc_count_stats([TorusPoint(0.2, 0.2), TorusPoint(0.2 + 3 * r, 0.2)], r)
    assert s.max_count == 1 and s.histogram == {1: 2}
    assert disc_count_stats([], 0.1).max_count == 0
    for bad in (0, -0.1, 0.6):
        with pytest.raises(ValueError):
            disc_count_stats([TorusPoint(0, 0)], bad)


def test_disc_wraparound():
    pts = [TorusPoint(0.999, 0.5), TorusPoint(0.001, 0.5)]
    assert disc_count_stats(pts, 0.01).max_count == 2
    assert max_disc_count_exact(pts, 0.01) == 2


def test_disc_dominates_exact_count():
    rng = random.Random(2)
    for _ in range(40):
        pts = [TorusPoint(rng.random(), rng.random()) for _ in range(rng.randint(1, 25))]
        radius = rng.choice([0.02, 0.05, 0.1, 0.2])
        exact = max_disc_count_exact(pts, radius)
        dom = disc_count_stats(pts, radius).max_count
        assert exact <= dom
        # points within 2r of one point all fit in the disc of radius 2r about it
        if 2 * radius <= 0.25:
            assert dom <= max_disc_count_exact(pts, 2 * radius)


def test_disc_matches_bruteforce_neighbour_count():
    rng = random.Random(9)
    pts = [TorusPoint(rng.random(), rng.random()) for _ in range(300)]
    for radius in (0.005, 0.03, 0.2, 0.4):
        counts = [sum(torus_distance(p, q) <= 2 * radius for q in pts) for p in pts]
        assert disc_count_stats(pts, radius).max_count == max(counts)


def test_disc_small_dyad_by_hand():
    # M = 3: pairs (5, 3) and (6, 2), points (3/5, 4/5) and (1/3, 2/3)
    pts = root_points(enumerate_root_pairs(3))
    assert pts == [TorusPoint(Fraction(3, 5), Fraction(4, 5)), TorusPoint(Fraction(1, 3), Fraction(2, 3))]
    d = torus_distance(*pts)
    assert d == pytest.approx(math.hypot(4 / 15, 2 / 15))
    assert disc_count_stats(pts, 1 / 3).max_count == 2
    assert max_disc_count_exact(pts, 0.2) == 2
    assert max_disc_count_exact(pts, 0.1) == 1


def test_disc_at_M_100_recorded():
    pts = root_points(enumerate_root_pairs(100))
    s = disc_count_stats(pts, 1 / 100)
    assert sum(s.histogram.values()) == len(pts)
    assert 1 <= s.max_count <= 3
