"""Double description: H-representation to generators, and back.

The cone routine works on primitive integer vectors and keeps, for each
extreme ray, the bitmask of processed inequality rows it lies on; adjacency
is decided by the combinatorial test on those masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..config import budget
from ..errors import DimensionOverflow, EmptyPolyhedron
from .intlin import integer_row, nullspace, primitive, rank, rref
from .polyhedra import HPolyhedron, VPolytope


@dataclass
class ConeGenerators:
    """Extreme rays, lineality basis and ray/row incidences of a cone."""

    n: int
    rays: list  # primitive int tuples
    lines: list  # int tuples
    zero: list  # per ray: bitmask over inequality rows
    nrows: int


def _dotnz(nz, v):
    s = 0
    for j, hv in nz:
        s += hv * v[j]
    return s


def cone_generators(n: int, ineqs: Sequence[Sequence[int]], eqs: Sequence[Sequence[int]] = ()) -> ConeGenerators:
    """Generators of ``{y : h.y >= 0 (ineqs), h.y == 0 (eqs)}`` in Z^n.

    Rows are integer vectors of length n. Inequality row k is recorded as
    bit k of each ray's incidence mask.
    """
    lines = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rays: list = []
    zero: list = []

    for h in eqs:
        nz = [(j, x) for j, x in enumerate(h) if x]
        if not nz:
            continue
        idx = next((k for k, l in enumerate(lines) if _dotnz(nz, l)), None)
        if idx is not None:
            l = lines.pop(idx)
            hl = _dotnz(nz, l)
            lines = [_combine(hl, v, -_dotnz(nz, v), l) for v in lines]
            rays = [_combine(abs(hl), r, -_dotnz(nz, r) * (1 if hl > 0 else -1), l) for r in rays]
            continue
        vals = [_dotnz(nz, r) for r in rays]
        new_rays, new_zero = [], []
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        for k, s in enumerate(vals):
            if s == 0:
                new_rays.append(rays[k])
                new_zero.append(zero[k])
        for p in pos:
            for q in neg:
                if _adjacent(p, q, zero, None, rays, n - len(lines) - 2):
                    new_rays.append(_combine(vals[p], rays[q], -vals[q], rays[p]))
                    new_zero.append(zero[p] & zero[q])
        rays, zero = new_rays, new_zero

    # effective ambient dimension after the equations
    eq_rank = rank([list(h) for h in eqs if any(h)]) if eqs else 0
    n_eff = n - eq_rank
    cap = budget("dd_rays", 2_000_000)

    for k, h in enumerate(ineqs):
        bit = 1 << k
        nz = [(j, x) for j, x in enumerate(h) if x]
        if not nz:
            for i in range(len(zero)):
                zero[i] |= bit
            continue
        idx = next((i for i, l in enumerate(lines) if _dotnz(nz, l)), None)
        if idx is not None:
            l = lines.pop(idx)
            hl = _dotnz(nz, l)
            if hl < 0:
                l = [-x for x in l]
                hl = -hl
            lines = [_combine(hl, v, -_dotnz(nz, v), l) for v in lines]
            rays = [_combine(hl, r, -_dotnz(nz, r), l) for r in rays]
            zero = [z | bit for z in zero]
            rays.append(tuple(primitive(l)))
            zero.append(bit - 1)  # tight on all earlier rows
            continue
        vals = [_dotnz(nz, r) for r in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        new_rays, new_zero = [], []
        for i, s in enumerate(vals):
            if s > 0:
                new_rays.append(rays[i])
                new_zero.append(zero[i])
            elif s == 0:
                new_rays.append(rays[i])
                new_zero.append(zero[i] | bit)
        if pos and neg:
            thr = n_eff - len(lines) - 2
            # holders[j]: bitmask of the rays lying on row j
            holders = [0] * k
            for i, z in enumerate(zero):
                b = 1 << i
                while z:
                    low = z & -z
                    holders[low.bit_length() - 1] |= b
                    z ^= low
            full = (1 << len(rays)) - 1
            for q in neg:
                zq = zero[q]
                for p in pos:
                    c = zero[p] & zq
                    if c.bit_count() < thr:
                        continue
                    if _adjacent_masks(c, holders, full):
                        new_rays.append(_combine(vals[p], rays[q], -vals[q], rays[p]))
                        new_zero.append(c | bit)
                if len(new_rays) > cap:
                    raise DimensionOverflow(f"more than {cap} intermediate rays")
        rays, zero = new_rays, new_zero
    return ConeGenerators(n, [tuple(r) for r in rays], [tuple(primitive(l)) for l in lines], zero, len(ineqs))


def _combine(a, u, b, v):
    """Primitive form of a*u + b*v."""
    return primitive([a * x + b * y for x, y in zip(u, v)])


def _adjacent_masks(common, holders, full):
    """Only the two candidate rays lie on every row of ``common``."""
    on = full
    while common:
        low = common & -common
        on &= holders[low.bit_length() - 1]
        if on.bit_count() <= 2:
            return True
        common ^= low
    return on.bit_count() <= 2


def _adjacent(p, q, zero, common, rays, thr):
    if common is None:
        common = zero[p] & zero[q]
        if common.bit_count() < thr:
            return False
    for k, z in enumerate(zero):
        if k != p and k != q and z & common == common:
            return False
    return True


# ---------------------------------------------------------------------------
# polyhedra


def homogenize(h: HPolyhedron):
    """Integer rows of the homogenization cone in (x0, x); first row is x0 >= 0."""
    ineqs = [(1,) + (0,) * h.dim]
    for a, b in h.ineqs:
        ineqs.append(integer_row((b,) + tuple(-x for x in a)))
    eqs = [integer_row((b,) + tuple(-x for x in a)) for a, b in h.eqs]
    return ineqs, eqs


def check_dim(d: int):
    bound = budget("max_dim", 40)
    if d > bound:
        raise DimensionOverflow(f"ambient dimension {d} exceeds bound {bound}")


def _generators(h: HPolyhedron) -> ConeGenerators:
    check_dim(h.dim)
    ineqs, eqs = homogenize(h)
    return cone_generators(h.dim + 1, ineqs, eqs)


def _to_vpolytope(dim: int, g: ConeGenerators) -> VPolytope:
    verts, rays = [], []
    for r in g.rays:
        if r[0] > 0:
            verts.append(tuple(Fraction(x, r[0]) for x in r[1:]))
        else:
            rays.append(tuple(Fraction(x) for x in r[1:]))
    if not verts:
        raise EmptyPolyhedron("no feasible point")
    lines = [tuple(Fraction(x) for x in l[1:]) for l in g.lines]
    return VPolytope(dim, sorted(verts), sorted(rays), sorted(lines))


def dd_convert(h: HPolyhedron) -> VPolytope:
    """Exact vertex/ray representation of an H-polyhedron (lex-sorted)."""
    return _to_vpolytope(h.dim, _generators(h))


# ---------------------------------------------------------------------------
# canonical H-forms


def _canonical_rows(n: int, ineq_rows, eq_rows):
    """Canonical integer forms of inequality rows modulo an equation space.

    Each row (in homogenized (b, -a) layout) is orthogonally projected away
    from the span of the equation rows and scaled to a primitive integer
    vector; rows that vanish (trivial 0 <= b) are dropped, duplicates merged.
    """
    basis = rref(eq_rows) if eq_rows else []
    # orthogonal projection needs an orthogonal basis: Gram-Schmidt over Q
    ortho = []
    for r in basis:
        v = list(r)
        for u, uu in ortho:
            f = sum(x * y for x, y in zip(v, u)) / uu
            v = [x - f * y for x, y in zip(v, u)]
        if any(v):
            ortho.append((v, sum(x * x for x in v)))
    out = set()
    for row in ineq_rows:
        v = [Fraction(x) for x in row]
        for u, uu in ortho:
            f = sum(x * y for x, y in zip(v, u)) / uu
            if f:
                v = [x - f * y for x, y in zip(v, u)]
        if not any(v[1:]):
            continue
        out.add(integer_row(v))
    eqs = [integer_row(r) for r in basis]
    return sorted(out), eqs


def _hform_from_homog(dim: int, ineq_rows, eq_rows) -> HPolyhedron:
    """Build an HPolyhedron from homogenized rows ``b*x0 - a.x >= 0``."""
    ineq_rows, eq_rows = _canonical_rows(dim + 1, ineq_rows, eq_rows)
    ineqs = [(tuple(-x for x in r[1:]), r[0]) for r in ineq_rows]
    eqs = []
    for r in eq_rows:
        a, b = tuple(-x for x in r[1:]), r[0]
        # orient equations so the leading nonzero coefficient is positive
        lead = next((x for x in a if x), 0)
        if lead < 0:
            a, b = tuple(-x for x in a), -b
        eqs.append((a, b))
    ineqs.sort()
    eqs.sort()
    return HPolyhedron(dim, ineqs, eqs)


def facet_reduce(h: HPolyhedron) -> HPolyhedron:
    """Irredundant H-form: implicit equations extracted, facets only.

    Raises EmptyPolyhedron for an infeasible system.
    """
    g = _generators(h)
    if not any(r[0] > 0 for r in g.rays):
        raise EmptyPolyhedron("no feasible point")
    return _reduce_with_generators(h, g)


def _reduce_with_generators(h: HPolyhedron, g: ConeGenerators) -> HPolyhedron:
    n = h.dim + 1
    gens = [list(r) for r in g.rays] + [list(l) for l in g.lines]
    cone_dim = rank(gens)
    eq_rows = nullspace(gens, n) if gens else [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    ineq_rows, _ = homogenize(h)
    facets = []
    line_rows = [list(l) for l in g.lines]
    seen = set()
    for k, row in enumerate(ineq_rows):
        if k == 0:
            continue  # the x0 >= 0 row describes the face at infinity
        bit = 1 << k
        tight = [i for i, z in enumerate(g.zero) if z & bit]
        if len(tight) == len(g.rays):
            continue  # implicit equation
        if not any(g.rays[i][0] > 0 for i in tight):
            continue
        key = frozenset(tight)
        if key in seen:
            continue
        if rank([list(g.rays[i]) for i in tight] + line_rows) == cone_dim - 1:
            seen.add(key)
            facets.append(row)
    return _hform_from_homog(h.dim, facets, eq_rows)


def hull(dim: int, points: Sequence, rays: Sequence = (), lines: Sequence = ()) -> HPolyhedron:
    """Facet-reduced H-form of conv(points) + cone(rays) + span(lines)."""
    if not points:
        raise EmptyPolyhedron("hull of no points")
    rows = []
    for p in points:
        rows.append(integer_row((1,) + tuple(-Fraction(x) for x in p)))
    for r in rays:
        rows.append(integer_row((0,) + tuple(-Fraction(x) for x in r)))
    eqs = [integer_row((0,) + tuple(-Fraction(x) for x in l)) for l in lines]
    g = cone_generators(dim + 1, rows, eqs)
    # dual rays (b, a) meaning a.x <= b; dual lines are equations
    ineq_rows = [(r[0],) + tuple(-x for x in r[1:]) for r in g.rays]
    eq_rows = [(l[0],) + tuple(-x for x in l[1:]) for l in g.lines]
    return _hform_from_homog(dim, ineq_rows, eq_rows)


def vform_to_hform(p: VPolytope) -> HPolyhedron:
    return hull(p.dim, p.vertices, p.rays, p.lines)


def extreme_points(dim: int, points: Sequence) -> list:
    """The points among ``points`` that are vertices of their convex hull."""
    pts = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    if len(pts) <= 1:
        return pts
    h = hull(dim, pts)
    out = []
    for p in pts:
        tight = [a for a, b in h.ineqs if sum(x * y for x, y in zip(a, p)) == b]
        if rank([list(a) for a in tight] + [list(a) for a, _ in h.eqs]) == dim:
            out.append(p)
    return out


def polyhedron_dim(p: VPolytope) -> int:
    """Dimension of the affine hull of a V-polyhedron (-1 when empty)."""
    if not p.vertices:
        return -1
    v0 = p.vertices[0]
    diffs = [[x - y for x, y in zip(v, v0)] for v in p.vertices[1:]]
    return rank(diffs + [list(r) for r in p.rays] + [list(l) for l in p.lines])
