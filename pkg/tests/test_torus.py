import itertools
from math import gcd

import pytest
from hypothesis import given, strategies as st

from torus_no3il import (
    Configuration,
    PlanePoint,
    TorusDims,
    TorusPoint,
    crt,
    det3,
    det_mod_test,
    diagonal_index,
    project_pi,
    project_rho,
)
from torus_no3il.lines import diagonal_line, geometry


def crt_by_scan(a, m, b, n):
    lcm = m * n // gcd(m, n)
    hits = [x for x in range(lcm) if (x - a) % m == 0 and (x - b) % n == 0]
    assert len(hits) <= 1
    return hits[0] if hits else None


def det_by_cofactors(X, Y, Z):
    rows = [[1, 1, 1], [X[0], Y[0], Z[0]], [X[1], Y[1], Z[1]]]
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def test_dims_derived_values():
    d = TorusDims(4, 6)
    assert (d.g, d.l) == (2, 12)
    assert d.g * d.l == d.m * d.n


@pytest.mark.parametrize("m, n", [(1, 5), (5, 1), (0, 3), (-2, 4)])
def test_dims_reject_degenerate(m, n):
    with pytest.raises(ValueError):
        TorusDims(m, n)


def test_configuration_rejects_bad_points():
    d = TorusDims(3, 4)
    with pytest.raises(ValueError):
        Configuration(d, [(0, 0), (0, 0)])
    with pytest.raises(ValueError):
        Configuration(d, [(3, 0)])
    assert Configuration(d, [(2, 1), (0, 3)]).points == ((0, 3), (2, 1))


@pytest.mark.parametrize(
    "args, expected",
    [((1, 2, 1, 3), 1), ((2, 4, 0, 6), 6), ((1, 2, 0, 2), None)],
)
def test_crt_examples(args, expected):
    assert crt(*args) == expected
    assert crt_by_scan(*args) == expected


def test_crt_exhaustive_small_moduli():
    for m in range(1, 13):
        for n in range(1, 13):
            for a in range(m):
                for b in range(n):
                    assert crt(a, m, b, n) == crt_by_scan(a, m, b, n), (a, m, b, n)


def test_crt_normalizes_negative_targets():
    assert crt(-1, 4, -1, 6) == 11


@pytest.mark.parametrize(
    "dims, p, expected",
    [((4, 6), (5, -1), (1, 5)), ((4, 6), (0, 0), (0, 0)), ((3, 9), (-3, 12), (0, 3))],
)
def test_project_pi(dims, p, expected):
    assert project_pi(TorusDims(*dims), PlanePoint(*p)) == expected


@pytest.mark.parametrize(
    "dims, p, expected",
    [((3, 6), (1, 4), (1, 1)), ((4, 6), (3, 5), (1, 1)), ((5, 10), (0, 7), (0, 2))],
)
def test_project_rho(dims, p, expected):
    assert project_rho(TorusDims(*dims), TorusPoint(*p)) == expected


def test_project_rho_rejects_coprime_dims():
    with pytest.raises(ValueError):
        project_rho(TorusDims(2, 3), (0, 0))


@pytest.mark.parametrize("mn", [(3, 6), (4, 6), (6, 9), (5, 10), (2, 8)])
def test_reduction_diagram_commutes(mn):
    dims = TorusDims(*mn)
    small = TorusDims(dims.g, dims.g)
    span = range(-2 * dims.l, 2 * dims.l + 1)
    for x in span:
        for y in span:
            assert project_rho(dims, project_pi(dims, (x, y))) == project_pi(small, (x, y))


@pytest.mark.parametrize(
    "pts, expected",
    [
        (((0, 0), (1, 1), (2, 2)), 0),
        (((0, 0), (1, 0), (0, 1)), 1),
        (((0, 0), (1, 3), (2, 12)), 6),
    ],
)
def test_det3_examples(pts, expected):
    assert det3(*pts) == expected
    assert det_by_cofactors(*pts) == expected


coords = st.integers(-10**12, 10**12)
points = st.tuples(coords, coords)


@given(points, points, points)
def test_det3_matches_cofactor_expansion(a, b, c):
    assert det3(a, b, c) == det_by_cofactors(a, b, c)


@given(points, points, points, points)
def test_det3_antisymmetric_and_translation_invariant(a, b, c, t):
    d = det3(a, b, c)
    assert det3(b, a, c) == -d
    assert det3(a, c, b) == -d
    assert det3(c, b, a) == -d
    shifted = [(p[0] + t[0], p[1] + t[1]) for p in (a, b, c)]
    assert det3(*shifted) == d


def test_det3_large_lifts_are_exact():
    big = 10**6 * 2
    assert det3((0, 0), (big, 1), (1, big)) == big * big - 1


@pytest.mark.parametrize(
    "dims, pts, expected",
    [
        ((4, 6), ((0, 0), (1, 1), (2, 4)), True),
        ((4, 6), ((0, 0), (0, 1), (1, 0)), False),
        ((3, 9), ((2, 5), (2, 5), (2, 5)), True),
    ],
)
def test_det_mod_test_examples(dims, pts, expected):
    assert det_mod_test(TorusDims(*dims), *pts) is expected


def test_det_mod_test_is_necessary_for_collinearity():
    for m in range(2, 9):
        for n in range(2, 9):
            dims = TorusDims(m, n)
            geo = geometry(dims)
            for a, b, c in itertools.combinations(dims.points(), 3):
                if geo.collinear(a, b, c):
                    assert det_mod_test(dims, a, b, c), (m, n, a, b, c)


@pytest.mark.parametrize(
    "dims, p, expected", [((4, 6), (3, 1), 0), ((7, 9), (0, 0), 0), ((3, 6), (1, 2), 2)]
)
def test_diagonal_index_examples(dims, p, expected):
    assert diagonal_index(TorusDims(*dims), p) == expected


@pytest.mark.parametrize("mn", [(2, 2), (4, 6), (3, 9), (6, 9), (8, 12), (5, 7)])
def test_diagonal_index_matches_membership(mn):
    dims = TorusDims(*mn)
    lines = [diagonal_line(dims, s).point_set for s in range(dims.g)]
    for a in dims.points():
        assert [s for s in range(dims.g) if a in lines[s]] == [diagonal_index(dims, a)]
