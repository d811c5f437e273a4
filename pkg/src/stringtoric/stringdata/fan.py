"""The fan on the dominant chamber and Minkowski additivity."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..config import budget
from ..errors import DimensionOverflow
from ..exactgeom import ConeH, Fan, common_refinement, cone_from_rays, dd_convert, face_lattice, fmt_rat
from ..exactgeom.intlin import primitive, rank
from .cones import StringCone
from .polytopes import big_cone, string_polytope


def chamber(r: int) -> ConeH:
    return ConeH(r, [(tuple(-1 if k == i else 0 for k in range(r)), 0) for i in range(r)])


def projected_face_cones(cone: StringCone) -> list[ConeH]:
    """Images in weight space of the faces of the big cone, full-dimensional ones only.

    A face is mapped by projecting its generators, which gives the image
    cone exactly.
    """
    r = cone.rs.rank
    seen = set()
    out = []
    for face in face_lattice(big_cone(cone)):
        rays = {primitive(v[:r]) for v in face.rays if any(v[:r])}
        lines = {primitive(v[:r]) for v in face.lines if any(v[:r])}
        if not rays or rank([list(x) for x in rays | lines]) < r:
            continue
        key = (frozenset(rays), frozenset(lines))
        if key in seen:
            continue
        seen.add(key)
        out.append(cone_from_rays(r, sorted(rays), sorted(lines)))
    return out


def string_fan(cone: StringCone) -> Fan:
    """Common refinement of the projected faces over the dominant chamber."""
    r = cone.rs.rank
    limit = budget("fan_rank", 3)
    if r > limit:
        raise DimensionOverflow(f"fan computation is limited to rank {limit}")
    return common_refinement(projected_face_cones(cone), chamber(r))


def minkowski_test(cone: StringCone, lam: Sequence, mu: Sequence) -> bool:
    """Whether Q(lam + mu) equals Q(lam) + Q(mu)."""
    p = string_polytope(cone, lam).vform.vertices
    q = string_polytope(cone, mu).vform.vertices
    total = string_polytope(cone, tuple(Fraction(a) + Fraction(b) for a, b in zip(lam, mu)))
    sums = {tuple(a + b for a, b in zip(u, v)) for u in p for v in q}
    if not all(total.hform.contains(s) for s in sums):
        return False
    return set(total.vform.vertices) <= sums


def fan_summary(fan: Fan) -> list[dict]:
    """Per maximal cone: inward facet normals and extreme rays."""
    out = []
    for c in fan.maximal_cones:
        gens = dd_convert(c)
        out.append({
            "facets": [[fmt_rat(-x) for x in a] for a, _ in c.ineqs],
            "rays": [[fmt_rat(x) for x in ray] for ray in gens.rays],
        })
    return out
