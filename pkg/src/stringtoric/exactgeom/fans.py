"""Face lattices of cones and common refinements of cone families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..config import budget
from ..errors import DimensionOverflow, SupportMismatch
from .dd import cone_generators, facet_reduce
from .intlin import integer_row, primitive, rank
from .operations import cone_from_rays
from .polyhedra import ConeH, Fan, HPolyhedron


@dataclass(frozen=True)
class Face:
    """A face of a cone: tight inequality rows plus its generators."""

    tight: frozenset  # indices into the parent's ineqs
    rays: tuple
    lines: tuple
    dim: int


def _cone_data(c: HPolyhedron):
    ineqs = [integer_row(tuple(-x for x in a)) for a, _ in c.ineqs]
    eqs = [integer_row(tuple(-x for x in a)) for a, _ in c.eqs]
    return cone_generators(c.dim, ineqs, eqs)


def face_lattice(c: HPolyhedron) -> list[Face]:
    """Every face of the cone ``c``, from the whole cone to its lineality space.

    Faces are closed sets of the ray/row incidence: adding one more row to a
    face's tight set and closing gives the faces below it.
    """
    g = _cone_data(c)
    nrows = len(c.ineqs)
    all_rows = frozenset(range(nrows))
    lines = [list(l) for l in g.lines]
    cap = budget("faces", 1 << 24)

    def rays_of(rows: frozenset):
        mask = 0
        for r in rows:
            mask |= 1 << r
        return [i for i, z in enumerate(g.zero) if z & mask == mask]

    def close(rows: frozenset):
        rs = rays_of(rows)
        if not rs:
            return all_rows, rs
        mask = (1 << nrows) - 1
        for i in rs:
            mask &= g.zero[i]
        return frozenset(k for k in range(nrows) if mask >> k & 1), rs

    top, top_rays = close(frozenset())
    seen = {top: top_rays}
    queue = [top]
    candidates = 0
    while queue:
        cur = queue.pop()
        for k in range(nrows):
            if k in cur:
                continue
            candidates += 1
            if candidates > cap:
                raise DimensionOverflow(f"face enumeration exceeded {cap} candidates")
            nxt, rs = close(cur | {k})
            if nxt not in seen:
                seen[nxt] = rs
                queue.append(nxt)
    faces = []
    for rows, rs in seen.items():
        gens = [list(g.rays[i]) for i in rs] + lines
        d = rank(gens) if gens else 0
        faces.append(Face(rows, tuple(g.rays[i] for i in rs), tuple(g.lines), d))
    faces.sort(key=lambda f: (f.dim, sorted(f.rays)))
    return faces


def faces(c: ConeH) -> list[ConeH]:
    """All faces of ``c`` as cones: tight rows turned into equations."""
    out = []
    for f in face_lattice(c):
        tight = [c.ineqs[k] for k in sorted(f.tight)]
        loose = [c.ineqs[k] for k in range(len(c.ineqs)) if k not in f.tight]
        out.append(ConeH(c.dim, loose, tuple(c.eqs) + tuple(tight)))
    return out


# ---------------------------------------------------------------------------
# common refinement


def _is_full_dim(h: HPolyhedron) -> bool:
    return not facet_reduce(h).eqs


def _interior_point(h: HPolyhedron) -> tuple:
    """Sum of the primitive extreme rays: a relative-interior point."""
    g = _cone_data(h)
    pt = [0] * h.dim
    for r in g.rays:
        pt = [a + b for a, b in zip(pt, r)]
    return tuple(Fraction(x) for x in primitive(pt)) if any(pt) else tuple(Fraction(0) for _ in pt)


def _rays(h: HPolyhedron):
    g = _cone_data(h)
    return [tuple(r) for r in g.rays], [tuple(l) for l in g.lines]


def _convex_union(cells: list[HPolyhedron], others: list[HPolyhedron], dim: int):
    rays, lines = [], []
    for c in cells:
        r, l = _rays(c)
        rays += r
        lines += l
    h = cone_from_rays(dim, rays, lines)
    for o in others:
        if _is_full_dim(h.intersect(o)):
            return None
    return h


def common_refinement(cones: Sequence[HPolyhedron], support: HPolyhedron) -> Fan:
    """Coarsest fan on ``support`` in which every input cone is a union of cones.

    The support is cut by every facet hyperplane of the full-dimensional
    input cones; chambers that lie in the same input cones are then merged
    whenever their union stays convex.
    """
    dim = support.dim
    support = facet_reduce(support)
    for c in cones:
        r, l = _rays(c)
        if not all(support.contains(x) for x in r) or any(
            not support.contains(x) or not support.contains(tuple(-y for y in x)) for x in l
        ):
            raise SupportMismatch("cone is not contained in the support")
    full = [facet_reduce(c) for c in cones]
    full = [c for c in full if not c.eqs]
    hyper = sorted({integer_row(a) for c in full for a, _ in c.ineqs})
    hyper = [h for h in hyper if any(h)]
    norm = set()
    for h in hyper:
        neg = tuple(-x for x in h)
        if neg not in norm:
            norm.add(h)
    regions = [support]
    for h in sorted(norm):
        nxt = []
        for reg in regions:
            lo = reg.with_rows([(h, 0)])
            hi = reg.with_rows([(tuple(-x for x in h), 0)])
            parts = [p for p in (lo, hi) if _is_full_dim(p)]
            nxt += [facet_reduce(p) for p in parts] if len(parts) == 2 else [reg]
        regions = nxt
    sigs = []
    for reg in regions:
        x = _interior_point(reg)
        sigs.append(frozenset(i for i, c in enumerate(full) if c.contains(x)))
    cells = [[i] for i in range(len(regions))]
    cones_of = {i: regions[i] for i in range(len(regions))}
    merged = True
    while merged:
        merged = False
        for a in range(len(cells)):
            for b in range(a + 1, len(cells)):
                if sigs[cells[a][0]] != sigs[cells[b][0]]:
                    continue
                members = cells[a] + cells[b]
                others = [regions[i] for i in range(len(regions)) if i not in members]
                u = _convex_union([regions[i] for i in members], others, dim)
                if u is None:
                    continue
                cells[a] = members
                cones_of[members[0]] = u
                del cells[b]
                merged = True
                break
            if merged:
                break
    maximal = []
    for cell in cells:
        c = cones_of[cell[0]] if len(cell) > 1 else regions[cell[0]]
        c = facet_reduce(c)
        maximal.append(ConeH(dim, [(a, 0) for a, _ in c.ineqs], [(a, 0) for a, _ in c.eqs]))
    maximal.sort(key=_interior_point)
    all_rays = sorted({r for m in maximal for r in _rays(m)[0]})
    sup = ConeH(dim, [(a, 0) for a, _ in support.ineqs], [(a, 0) for a, _ in support.eqs])
    return Fan(dim, tuple(maximal), sup, tuple(all_rays))


def is_face_of(f: HPolyhedron, c: HPolyhedron) -> bool:
    """Whether the cone ``f`` (a subset of ``c``) is a face of ``c``."""
    rf, lf = _rays(f)
    for face in face_lattice(c):
        gens = [list(r) for r in face.rays] + [list(l) for l in face.lines]
        if not gens and not rf and not lf:
            return True
        if gens and rank(gens) == rank(gens + [list(r) for r in rf] + [list(l) for l in lf]):
            fh = cone_from_rays(c.dim, face.rays, face.lines)
            if all(fh.contains(x) for x in rf) and _same(fh, f):
                return True
    return False


def _same(a: HPolyhedron, b: HPolyhedron) -> bool:
    ra, la = _rays(a)
    rb, lb = _rays(b)
    return all(b.contains(x) for x in ra + la) and all(a.contains(x) for x in rb + lb)
