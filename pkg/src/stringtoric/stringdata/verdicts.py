"""Integrality, reflexivity and tangent-cone verdicts for string polytopes."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..errors import NotRegular
from ..exactgeom import (
    ConeH,
    dd_convert,
    is_integral,
    is_reflexive,
    is_simplicial_cone,
    is_unimodular_cone,
    same_set,
    tangent_cone,
)
from ..exactgeom.polyhedra import fmt_rat
from ..rootdata import build_root_system
from .cones import E6_SUFFIX, StringCone, builtin_cone, lambda_coefficients, lambda_inequalities
from .polytopes import highest_weight_vertex, string_polytope


def anticanonical_check(cone: StringCone) -> dict:
    """Integrality of Q(2 rho), and reflexivity when it is integral."""
    rs = cone.rs
    poly = string_polytope(cone, tuple(2 for _ in range(rs.rank)))
    v = poly.vform
    integral = is_integral(v)
    reflexive = is_reflexive(v) if integral else False
    return {
        "root_system": rs.name,
        "word": list(cone.word),
        "provenance": cone.provenance,
        "vertices": len(v.vertices),
        "integral": integral,
        "reflexive": reflexive,
    }


def e6_suffix_cone() -> StringCone:
    return builtin_cone(build_root_system("E6"), E6_SUFFIX)


@lru_cache(maxsize=None)
def _e6_rho_vertices() -> tuple:
    sc = e6_suffix_cone()
    h = sc.cone.intersect(lambda_inequalities(sc.rs, sc.word, (1,) * 6))
    return tuple(dd_convert(h).vertices)


def e6_counterexample(n: int) -> dict:
    """Integrality of the 16-dimensional tail polytope at weight n*rho.

    The right-hand sides are linear in the weight, so the polytope at n*rho
    is the n-th dilate of the one at rho.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    verts = [tuple(n * x for x in p) for p in _e6_rho_vertices()]
    dens = sorted({x.denominator for p in verts for x in p})
    return {"n": n, "vertices": len(verts), "integral": dens == [1], "denominators": dens}


def hw_tangent_cone_check(cone: StringCone, lam: Sequence) -> dict:
    """Tangent cone of Q(lam) at its highest weight vertex.

    Reports whether it equals the cone cut out by the homogeneous weight
    inequalities, and whether its primitive generators form a lattice basis.
    """
    rs = cone.rs
    lam = tuple(lam)
    if any(x <= 0 for x in lam):
        raise NotRegular(f"{lam} is not regular dominant")
    poly = string_polytope(cone, lam)
    q = highest_weight_vertex(rs, cone.word, lam)
    tc = tangent_cone(poly.hform, q)
    n = cone.length
    weight_cone = ConeH(n, [(row, 0) for row in lambda_coefficients(rs, cone.word)])
    equal = same_set(tc, weight_cone)
    gens = dd_convert(tc)
    return {
        "root_system": rs.name,
        "word": list(cone.word),
        "lambda": list(lam),
        "vertex": [fmt_rat(x) for x in q],
        "is_vertex": q in set(poly.vform.vertices),
        "equals_weight_cone": equal,
        "simplicial": is_simplicial_cone(tc),
        "unimodular": is_unimodular_cone(tc),
        "rays": [[fmt_rat(x) for x in r] for r in gens.rays],
    }


def origin_tangent_cone(cone: StringCone, lam: Sequence) -> ConeH:
    """Tangent cone of Q(lam) at the origin."""
    poly = string_polytope(cone, tuple(lam))
    return tangent_cone(poly.hform, (0,) * cone.length)


def origin_cone_simplicial(cone: StringCone, lam: Sequence) -> bool:
    return is_simplicial_cone(origin_tangent_cone(cone, lam))
