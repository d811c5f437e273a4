"""Moment polytopes and weight cones of toric limits."""

from __future__ import annotations

from fractions import Fraction

from ..errors import ChamberViolation
from ..exactgeom import ConeH, HPolyhedron, VPolytope, dd_convert, facet_reduce, vform_to_hform
from .cones import StringCone
from .polytopes import big_cone


def _reduced_cone(h: HPolyhedron) -> ConeH:
    red = facet_reduce(h)
    return ConeH(h.dim, [(a, 0) for a, _ in red.ineqs], [(a, 0) for a, _ in red.eqs])


def spherical_limit_cone(cone: StringCone, weight_cone: HPolyhedron) -> ConeH:
    """``(weight_cone x R^N)`` intersected with the big cone."""
    r, n = cone.rs.rank, cone.length
    if weight_cone.dim != r or not weight_cone.is_homogeneous:
        raise ValueError("weight cone must be a cone in weight space")
    gens = dd_convert(weight_cone)
    if gens.lines or any(x < 0 for ray in gens.rays for x in ray):
        raise ChamberViolation("weight cone leaves the dominant chamber")
    lift = lambda rows: [(tuple(a) + (0,) * n, 0) for a, _ in rows]  # noqa: E731
    return _reduced_cone(big_cone(cone).with_rows(lift(weight_cone.ineqs), lift(weight_cone.eqs)))


def dual_map(rs) -> list[list[int]]:
    """Matrix of ``lam -> -w0(lam)`` in fundamental coordinates."""
    cols = [rs.dual_weight(rs.fundamental_weight(i)) for i in range(1, rs.rank + 1)]
    return [[cols[i][j] for i in range(rs.rank)] for j in range(rs.rank)]


def moment_polytope_limit(cone: StringCone, moment: VPolytope) -> HPolyhedron:
    """``{(lam, t) : lam in moment, t in Q(lam*)}``, facet-reduced."""
    rs = cone.rs
    r = rs.rank
    if moment.dim != r:
        raise ValueError("moment polytope must live in weight space")
    if any(x < 0 for v in moment.vertices for x in v) or not moment.is_bounded:
        raise ChamberViolation("moment polytope leaves the dominant chamber")
    d = dual_map(rs)
    big = big_cone(cone)

    def compose(a):
        lam_part = [sum(Fraction(a[i]) * d[i][j] for i in range(r)) for j in range(r)]
        return tuple(lam_part) + tuple(a[r:])

    ineqs = [(compose(a), 0) for a, _ in big.ineqs]
    eqs = [(compose(a), 0) for a, _ in big.eqs]
    ph = vform_to_hform(moment)
    n = cone.length
    ineqs += [(tuple(a) + (0,) * n, b) for a, b in ph.ineqs]
    eqs += [(tuple(a) + (0,) * n, b) for a, b in ph.eqs]
    return facet_reduce(HPolyhedron(r + n, ineqs, eqs))
