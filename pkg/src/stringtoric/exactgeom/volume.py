"""Lattice-normalized volume by pulling triangulation."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .dd import hull
from .intlin import det, kernel_lattice_basis, rank, solve
from .polyhedra import VPolytope


def _affine_rank(points, idx) -> int:
    idx = list(idx)
    if not idx:
        return -1
    p0 = points[idx[0]]
    return rank([[a - b for a, b in zip(points[i], p0)] for i in idx[1:]])


def pulling_triangulation(points, facet_sets, dim_p: int) -> list[tuple[int, ...]]:
    """Simplices (as index tuples) of a pulling triangulation.

    ``facet_sets`` are the vertex-index sets of the facets of the polytope
    spanned by ``points``; faces of faces are found as intersections with
    these global facets, which is enough because every face of a polytope
    is an intersection of facets.
    """
    facet_sets = [frozenset(f) for f in facet_sets]

    def rec(face: frozenset, d: int):
        if d == 0:
            return [(min(face),)]
        apex = min(face)
        subfaces = set()
        for f in facet_sets:
            sub = face & f
            if apex in sub or sub == face or len(sub) < d:
                continue
            if _affine_rank(points, sorted(sub)) == d - 1:
                subfaces.add(sub)
        # keep only maximal candidates (proper facets of this face)
        subfaces = [s for s in subfaces if not any(s < t for t in subfaces)]
        out = []
        for sub in sorted(subfaces, key=sorted):
            for simplex in rec(sub, d - 1):
                out.append((apex,) + simplex)
        return out

    return rec(frozenset(range(len(points))), dim_p)


def volume(p: VPolytope) -> Fraction:
    """Volume relative to the lattice of the affine hull's direction space.

    A fundamental cell of that lattice has volume 1, so lower-dimensional
    polytopes (fibers) get basis-independent values; a point has volume 1.
    """
    if not p.is_bounded:
        raise ValueError("volume of an unbounded polyhedron")
    pts = list(p.vertices)
    if not pts:
        return Fraction(0)
    if len(pts) == 1:
        return Fraction(1)
    h = hull(p.dim, pts)
    k = p.dim - len(h.eqs)
    basis = kernel_lattice_basis([list(a) for a, _ in h.eqs], p.dim) if h.eqs else [
        tuple(1 if i == j else 0 for j in range(p.dim)) for i in range(p.dim)
    ]
    # coordinates of each point relative to the lattice basis
    bt = [[basis[j][i] for j in range(k)] for i in range(p.dim)]
    p0 = pts[0]
    coords = []
    for v in pts:
        c = solve(bt, [a - b for a, b in zip(v, p0)])
        assert c is not None
        coords.append(c)
    facet_sets = []
    for a, b in h.ineqs:
        facet_sets.append([i for i, v in enumerate(pts) if sum(x * y for x, y in zip(a, v)) == b])
    total = Fraction(0)
    for s in pulling_triangulation(pts, facet_sets, k):
        base = coords[s[0]]
        total += abs(det([[x - y for x, y in zip(coords[i], base)] for i in s[1:]]))
    return total / factorial(k)
