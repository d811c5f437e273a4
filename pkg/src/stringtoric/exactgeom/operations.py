"""Dilation, integrality, Minkowski sums, polar duality, tangent cones."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import CenterNotInterior, DimMismatch, NotFullDim
from .dd import dd_convert, extreme_points, hull, vform_to_hform
from .intlin import integer_row, rank
from .lattice import lattice_points
from .polyhedra import ConeH, HPolyhedron, VPolytope, vec


def dilate(h: HPolyhedron, n) -> HPolyhedron:
    """``n * h`` for a positive rational n: every right-hand side scaled."""
    n = Fraction(n)
    if n <= 0:
        raise ValueError("dilation factor must be positive")
    return HPolyhedron(h.dim, [(a, n * b) for a, b in h.ineqs], [(a, n * b) for a, b in h.eqs])


def is_integral(p: VPolytope) -> bool:
    return all(x.denominator == 1 for v in p.vertices for x in v)


def minkowski_sum(p: VPolytope, q: VPolytope) -> VPolytope:
    """Vertices of p + q: pairwise vertex sums reduced to extreme points."""
    if p.dim != q.dim:
        raise DimMismatch(f"{p.dim} != {q.dim}")
    sums = {tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices}
    return VPolytope(p.dim, extreme_points(p.dim, sums))


def _full_dim_hform(p: VPolytope) -> HPolyhedron:
    h = vform_to_hform(p)
    if h.eqs:
        raise NotFullDim(f"polytope lies in {len(h.eqs)} independent hyperplanes")
    return h


def polar_dual(p: VPolytope, center: Sequence) -> VPolytope:
    """``{y : y.(x - c) <= 1 for all x in p}`` as a V-polytope.

    Each facet a.x <= b of p contributes the vertex a / (b - a.c).
    """
    if not p.is_bounded:
        raise NotFullDim("polar dual needs a bounded polytope")
    c = vec(center)
    h = _full_dim_hform(p)
    verts = []
    for a, b in h.ineqs:
        s = b - sum(x * y for x, y in zip(a, c))
        if s <= 0:
            raise CenterNotInterior(f"center violates or touches facet {a} <= {b}")
        verts.append(tuple(x / s for x in a))
    return VPolytope(p.dim, sorted(verts))


def interior_lattice_points(p: VPolytope) -> list[tuple[int, ...]]:
    h = vform_to_hform(p)
    return [x for x in lattice_points(h) if h.contains(x, strict=True)]


def is_reflexive(p: VPolytope) -> bool:
    """Integral, one interior lattice point, integral polar dual about it."""
    _full_dim_hform(p)
    if not is_integral(p):
        return False
    inner = interior_lattice_points(p)
    if len(inner) != 1:
        return False
    return is_integral(polar_dual(p, inner[0]))


def tangent_cone(h: HPolyhedron, point: Sequence) -> ConeH:
    """Cone of feasible directions of ``h`` at a point of it."""
    x = vec(point)
    if not h.contains(x):
        raise ValueError("point is not in the polyhedron")
    tight = [a for a, b in h.ineqs if sum(u * v for u, v in zip(a, x)) == b]
    return ConeH(h.dim, [(a, 0) for a in tight], [(a, 0) for a, _ in h.eqs])


def cone_rays(c: HPolyhedron) -> VPolytope:
    return dd_convert(c)


def is_simplicial_cone(c: HPolyhedron) -> bool:
    """Pointed cone whose extreme rays are linearly independent."""
    v = dd_convert(c)
    if v.lines:
        return False
    return len(v.rays) == rank([list(r) for r in v.rays])


def is_unimodular_cone(c: HPolyhedron) -> bool:
    """Simplicial, full-dimensional, primitive rays form a lattice basis."""
    from .intlin import det

    v = dd_convert(c)
    if v.lines or len(v.rays) != c.dim:
        return False
    rows = [integer_row(r) for r in v.rays]
    return abs(det(rows)) == 1


def cone_from_rays(dim: int, rays: Sequence, lines: Sequence = ()) -> ConeH:
    """Facet-reduced H-form of cone(rays) + span(lines)."""
    h = hull(dim, [(0,) * dim], rays, lines)
    return ConeH(dim, [(a, 0) for a, _ in h.ineqs], [(a, 0) for a, _ in h.eqs])


def same_set(p: HPolyhedron, q: HPolyhedron) -> bool:
    """Exact set equality by mutual containment of generators."""
    vp, vq = dd_convert(p), dd_convert(q)
    return _inside(vp, q) and _inside(vq, p)


def _inside(v: VPolytope, h: HPolyhedron) -> bool:
    if not all(h.contains(x) for x in v.vertices):
        return False
    for r in v.rays:
        for a, _ in h.ineqs:
            if sum(x * y for x, y in zip(a, r)) > 0:
                return False
        for a, _ in h.eqs:
            if sum(x * y for x, y in zip(a, r)) != 0:
                return False
    for l in v.lines:
        for a, _ in h.ineqs + h.eqs:
            if sum(x * y for x, y in zip(a, l)) != 0:
                return False
    return True
