from fractions import Fraction
from itertools import product
from math import comb, gcd

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from stringtoric.errors import CenterNotInterior, EmptyPolyhedron, NotFullDim, SupportMismatch
from stringtoric.exactgeom import (
    ConeH,
    HPolyhedron,
    VPolytope,
    common_refinement,
    cone_from_rays,
    count_lattice_points,
    dd_convert,
    dilate,
    extreme_points,
    face_lattice,
    facet_reduce,
    hull,
    interior_lattice_points,
    is_integral,
    is_reflexive,
    is_simplicial_cone,
    is_unimodular_cone,
    lattice_points,
    linear_image,
    minkowski_sum,
    polar_dual,
    polyhedron_dim,
    project,
    read_ieq,
    read_poi,
    same_set,
    tangent_cone,
    volume,
    write_ieq,
    write_poi,
)
from stringtoric.exactgeom.io import from_record, to_record

F = Fraction


def box(*sides):
    d = len(sides)
    rows = []
    for i, s in enumerate(sides):
        e = tuple(1 if k == i else 0 for k in range(d))
        rows.append((e, s))
        rows.append((tuple(-x for x in e), 0))
    return HPolyhedron(d, rows)


def simplex(d):
    rows = [(tuple(-1 if k == i else 0 for k in range(d)), 0) for i in range(d)]
    rows.append(((1,) * d, 1))
    return HPolyhedron(d, rows)


# -- independent 2D oracles ------------------------------------------------------


def monotone_chain(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def shoelace(poly):
    s = 0
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        s += x1 * y2 - x2 * y1
    return F(abs(s), 2)


def pick_count(poly):
    area = shoelace(poly)
    boundary = sum(gcd(abs(x2 - x1), abs(y2 - y1)) for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]))
    interior = area - F(boundary, 2) + 1
    return int(interior) + boundary


points2d = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=9)


def full_dim_2d(pts):
    poly = monotone_chain(pts)
    return len(poly) >= 3 and shoelace(poly) > 0


# -- double description ----------------------------------------------------------


def test_unit_square_vertices():
    v = dd_convert(box(1, 1))
    assert v.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert not v.rays


def test_orthant_has_rays_only_from_origin():
    v = dd_convert(ConeH.from_normals(2, [(-1, 0), (0, -1)]))
    assert v.vertices == ((0, 0),)
    assert sorted(v.rays) == [(0, 1), (1, 0)]


def test_half_plane_has_a_line():
    v = dd_convert(ConeH.from_normals(2, [(0, -1)]))
    assert len(v.lines) == 1 and v.lines[0][1] == 0
    assert v.rays == ((0, 1),)


def test_infeasible_raises():
    h = HPolyhedron(1, [((1,), 0), ((-1,), -1)])
    with pytest.raises(EmptyPolyhedron):
        dd_convert(h)


def test_cube_counts():
    v = dd_convert(box(1, 1, 1))
    assert len(v.vertices) == 8
    assert len(facet_reduce(box(1, 1, 1)).ineqs) == 6


def test_facet_reduce_drops_redundant_rows():
    h = box(1, 1).with_rows([((1, 1), 5), ((2, 0), 2)])
    assert len(facet_reduce(h).ineqs) == 4


def test_facet_reduce_turns_implicit_equations_into_equations():
    h = HPolyhedron(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])
    red = facet_reduce(h)
    assert len(red.eqs) == 1 and len(red.ineqs) == 2


@settings(max_examples=40, deadline=None)
@given(points2d)
def test_hull_matches_monotone_chain(pts):
    if not full_dim_2d(pts):
        return
    expected = sorted(monotone_chain(pts))
    assert sorted(extreme_points(2, pts)) == [tuple(F(x) for x in p) for p in expected]
    h = hull(2, pts)
    assert len(h.ineqs) == len(expected)
    assert sorted(dd_convert(h).vertices) == [tuple(F(x) for x in p) for p in expected]


@settings(max_examples=40, deadline=None)
@given(points2d)
def test_volume_and_lattice_count_against_shoelace_and_pick(pts):
    if not full_dim_2d(pts):
        return
    poly = monotone_chain(pts)
    v = VPolytope(2, poly)
    assert volume(v) == shoelace(poly)
    assert count_lattice_points(hull(2, pts)) == pick_count(poly)


@settings(max_examples=25, deadline=None)
@given(points2d)
def test_polar_dual_is_an_involution(pts):
    if not full_dim_2d(pts):
        return
    poly = monotone_chain(pts)
    # a rational interior point: the vertex average
    c = tuple(F(sum(p[i] for p in poly), len(poly)) for i in range(2))
    p = VPolytope(2, poly)
    back = polar_dual(polar_dual(p, c), (0, 0))
    shifted = sorted(tuple(x + ci for x, ci in zip(q, c)) for q in back.vertices)
    assert shifted == sorted(tuple(F(x) for x in q) for q in poly)


# -- volumes, dilation and lattice points ---------------------------------------------


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dilated_simplex_ehrhart(d, n):
    assert count_lattice_points(dilate(simplex(d), n)) == comb(n + d, d)


@pytest.mark.parametrize("sides", [(1, 1), (2, 3), (1, 2, 3)])
def test_box_volume_and_points(sides):
    v = dd_convert(box(*sides))
    expected = 1
    pts = 1
    for s in sides:
        expected *= s
        pts *= s + 1
    assert volume(v) == expected
    assert len(lattice_points(box(*sides))) == pts


def test_relative_volume_of_lower_dimensional_pieces():
    assert volume(VPolytope(3, [(0, 0, 0), (1, 1, 1)])) == 1
    assert volume(VPolytope(3, [(0, 0, 0), (2, 2, 2)])) == 2
    assert volume(VPolytope(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == F(1, 2)
    assert volume(VPolytope(2, [(5, 7)])) == 1


def test_lattice_points_brute_force_in_3d():
    h = HPolyhedron(3, [((1, 1, 1), 3), ((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0), ((1, -1, 0), 1)])
    brute = [p for p in product(range(4), repeat=3) if h.contains(p)]
    assert lattice_points(h) == sorted(brute)


def test_minkowski_sum_of_segments_is_square():
    a = VPolytope(2, [(0, 0), (1, 0)])
    b = VPolytope(2, [(0, 0), (0, 1)])
    assert sorted(minkowski_sum(a, b).vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_square_is_reflexive_and_dual_is_diamond():
    sq = VPolytope(2, [(-1, -1), (-1, 1), (1, -1), (1, 1)])
    assert is_reflexive(sq)
    assert sorted(polar_dual(sq, (0, 0)).vertices) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert interior_lattice_points(sq) == [(0, 0)]


def test_non_reflexive_examples():
    assert not is_reflexive(VPolytope(2, [(-2, -2), (-2, 2), (2, -2), (2, 2)]))
    assert not is_reflexive(VPolytope(2, [(0, 0), (1, 0), (0, 1)]))


def test_polar_errors():
    with pytest.raises(CenterNotInterior):
        polar_dual(VPolytope(2, [(0, 0), (1, 0), (0, 1)]), (0, 0))
    with pytest.raises(NotFullDim):
        polar_dual(VPolytope(2, [(0, 0), (1, 1)]), (F(1, 2), F(1, 2)))


def test_is_integral():
    assert is_integral(VPolytope(1, [(0,), (2,)]))
    assert not is_integral(VPolytope(1, [(0,), (F(1, 2),)]))


# -- projections ---------------------------------------------------------------


def test_project_cube_to_square():
    assert same_set(project(box(1, 2, 3), [0, 1]), box(1, 2))


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=4, max_size=8))
def test_projection_equals_hull_of_projected_vertices(pts):
    flat = [p[:2] for p in pts]
    if not full_dim_2d(flat):
        return
    h = hull(3, pts)
    assert same_set(project(h, [0, 1]), hull(2, flat))


def test_linear_image_of_square_under_shear():
    img = linear_image(box(1, 1), [[1, 1], [0, 1]])
    assert sorted(dd_convert(img).vertices) == [(0, 0), (1, 0), (1, 1), (2, 1)]


def test_project_of_empty_raises():
    with pytest.raises(EmptyPolyhedron):
        project(HPolyhedron(2, [((1, 0), 0), ((-1, 0), -1)]), [1])


# -- cones and fans --------------------------------------------------------------------


def test_face_lattice_of_simplicial_cone():
    assert len(face_lattice(ConeH.from_normals(3, [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]))) == 8
    assert len(face_lattice(ConeH.from_normals(2, [(0, -1)]))) == 2


def test_face_lattice_of_square_pyramid():
    # cone over a square: apex, 4 rays, 4 two-dimensional faces, itself
    c = cone_from_rays(3, [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)])
    assert len(face_lattice(c)) == 10
    assert not is_simplicial_cone(c)


def test_unimodularity():
    assert is_unimodular_cone(cone_from_rays(2, [(1, 0), (0, 1)]))
    assert is_unimodular_cone(cone_from_rays(2, [(1, 0), (1, 1)]))
    assert not is_unimodular_cone(cone_from_rays(2, [(1, 0), (1, 2)]))


def test_tangent_cone_of_square_corner():
    tc = tangent_cone(box(1, 1), (1, 1))
    assert same_set(tc, ConeH.from_normals(2, [(1, 0), (0, 1)]))


def test_common_refinement_splits_by_a_wall():
    quadrant = ConeH.from_normals(2, [(-1, 0), (0, -1)])
    below = cone_from_rays(2, [(1, 0), (1, 1)])
    above = cone_from_rays(2, [(1, 1), (0, 1)])
    fan = common_refinement([quadrant, below], quadrant)
    assert len(fan.maximal_cones) == 2
    got = sorted(sorted(dd_convert(c).rays) for c in fan.maximal_cones)
    want = sorted(sorted(dd_convert(c).rays) for c in (below, above))
    assert got == want


def test_common_refinement_with_wrong_support():
    quadrant = ConeH.from_normals(2, [(-1, 0), (0, -1)])
    with pytest.raises(SupportMismatch):
        common_refinement([cone_from_rays(2, [(1, 0), (-1, 1)])], quadrant)


def test_polyhedron_dim():
    assert polyhedron_dim(VPolytope(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0)])) == 2


# -- file formats ----------------------------------------------------------------------


def test_ieq_layout():
    text = write_ieq(box(1, 1))
    lines = text.splitlines()
    assert lines[0] == "DIM = 2"
    assert "INEQUALITIES_SECTION" in lines and lines[-1] == "END"
    assert sum(1 for ln in lines if ln.startswith("(")) == 4


def test_square_poi_has_four_vertex_lines():
    text = write_poi(dd_convert(box(1, 1)))
    assert "CONV_SECTION" in text
    assert sum(1 for ln in text.splitlines() if ln.startswith("(")) == 4


def test_infeasible_marker():
    assert "INFEASIBLE" in write_ieq(None, 2).splitlines()
    assert read_ieq(write_ieq(None, 2)) is None
    assert read_poi(write_poi(None, 2)) is None


rows2 = st.lists(
    st.tuples(st.tuples(st.fractions(-5, 5, max_denominator=4), st.fractions(-5, 5, max_denominator=4)),
              st.fractions(-5, 5, max_denominator=4)),
    min_size=1, max_size=5,
)


@settings(max_examples=50, deadline=None)
@given(rows2)
def test_ieq_round_trip(rows):
    rows = [r for r in rows if any(r[0])]
    h = HPolyhedron(2, rows)
    back = read_ieq(write_ieq(h))
    assert back.dim == 2
    # rows may be rescaled, but describe the same half-planes in order
    for (a, b), (c, d) in zip(h.ineqs, back.ineqs):
        scale = next(x / y for x, y in zip(a, c) if y)
        assert scale > 0
        assert tuple(x / scale for x in a) == tuple(c) and b / scale == d


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.fractions(-3, 3, max_denominator=5), st.fractions(-3, 3, max_denominator=5)),
                min_size=1, max_size=6, unique=True))
def test_poi_and_record_round_trip(pts):
    v = VPolytope(2, sorted(pts))
    assert read_poi(write_poi(v)).vertices == v.vertices
    _, back = from_record(to_record(v=v))
    assert back.vertices == v.vertices
