"""String polytopes, the big cone, weight projection and fibers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from ..errors import EmptyPolyhedron, FiberNotSingleton, NotDominant
from ..exactgeom import (
    ConeH,
    HPolyhedron,
    LatticeEnumerator,
    VPolytope,
    dd_convert,
    facet_reduce,
    lattice_points,
    polyhedron_dim,
    volume,
)
from ..rootdata import RootSystem
from .cones import StringCone, lambda_coefficients, lambda_inequalities


def _check_dominant(lam):
    if any(Fraction(x) < 0 for x in lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")


@dataclass(frozen=True)
class StringPolytope:
    cone: StringCone
    lam: tuple
    hform: HPolyhedron = field(repr=False)

    @property
    def rs(self) -> RootSystem:
        return self.cone.rs

    @property
    def word(self) -> tuple:
        return self.cone.word

    @cached_property
    def vform(self) -> VPolytope:
        return dd_convert(self.hform)

    @cached_property
    def facets(self) -> HPolyhedron:
        return facet_reduce(self.hform)

    @cached_property
    def lattice_points(self) -> list:
        return lattice_points(self.hform)


def string_polytope(cone: StringCone, lam: Sequence) -> StringPolytope:
    """Q(lam): the string cone cut by the weight inequalities."""
    lam = tuple(lam)
    if len(lam) != cone.rs.rank:
        raise ValueError(f"weight needs {cone.rs.rank} coordinates")
    _check_dominant(lam)
    h = cone.cone.intersect(lambda_inequalities(cone.rs, cone.word, lam))
    return StringPolytope(cone, lam, h)


def big_cone(cone: StringCone) -> ConeH:
    """Homogeneous system on (lam, t) whose slice at lam is Q(lam)."""
    r, n = cone.rs.rank, cone.length
    ineqs = []
    for i in range(r):
        ineqs.append((tuple(-1 if k == i else 0 for k in range(r)) + (0,) * n, 0))
    for a, _ in cone.cone.ineqs:
        ineqs.append(((0,) * r + tuple(a), 0))
    eqs = [((0,) * r + tuple(a), 0) for a, _ in cone.cone.eqs]
    for row, ik in zip(lambda_coefficients(cone.rs, cone.word), cone.word):
        lam_part = tuple(-1 if k == ik - 1 else 0 for k in range(r))
        ineqs.append((lam_part + tuple(row), 0))
    return ConeH(r + n, ineqs, eqs)


class LatticeCounter:
    """Lattice points of Q(lam) for many lam from one set of projections."""

    def __init__(self, cone: StringCone, order: Sequence[int] | None = None):
        self.cone = cone
        self.enum = LatticeEnumerator(big_cone(cone), cone.rs.rank, order)

    def count(self, lam: Sequence) -> int:
        _check_dominant(lam)
        return self.enum.count(tuple(lam))

    def points(self, lam: Sequence) -> list:
        _check_dominant(lam)
        return self.enum.points(tuple(lam))


def highest_weight_vertex(rs: RootSystem, word: Sequence[int], lam: Sequence) -> tuple:
    """``(<lam*, beta_k^vee>)_k``: the point of Q(lam) over the weight lam*."""
    _check_dominant(lam)
    star = rs.dual_weight(tuple(lam))
    return tuple(Fraction(rs.pairing(star, b)) for b in rs.beta_sequence(word))


def projection_matrix(rs: RootSystem, word: Sequence[int]) -> list[list[int]]:
    """Matrix of ``t -> sum t_k alpha_{i_k}`` in fundamental coordinates."""
    c = rs.cartan
    return [[c[j][ik - 1] for ik in word] for j in range(rs.rank)]


def pi_lambda(rs: RootSystem, word: Sequence[int], lam: Sequence, t: Sequence) -> tuple:
    """``-lam + sum_k t_k alpha_{i_k}`` in fundamental coordinates."""
    if len(t) != len(word):
        raise ValueError("string vector length differs from word length")
    m = projection_matrix(rs, word)
    return tuple(sum(a * Fraction(x) for a, x in zip(row, t)) - Fraction(l) for row, l in zip(m, lam))


def fiber_polytope(poly: StringPolytope, mu: Sequence) -> HPolyhedron:
    """Q(lam) intersected with the preimage of mu under the weight map."""
    m = projection_matrix(poly.rs, poly.word)
    eqs = [(row, Fraction(x) + Fraction(l)) for row, x, l in zip(m, mu, poly.lam)]
    return poly.hform.with_rows(eqs=eqs)


def fiber_volume(poly: StringPolytope, mu: Sequence) -> Fraction:
    """Volume of the fiber over mu in dimension N - rank (0 if it is thinner).

    Volumes are taken relative to the integer kernel of the weight map, so
    they are comparable between words.
    """
    h = fiber_polytope(poly, mu)
    try:
        v = dd_convert(h)
    except EmptyPolyhedron:
        return Fraction(0)
    if polyhedron_dim(v) < poly.cone.length - poly.rs.rank:
        return Fraction(0)
    return volume(v)


def extremal_weight_vertices(poly: StringPolytope) -> dict:
    """For each mu in the orbit of lam*, the unique point of Q(lam) over mu."""
    rs = poly.rs
    if any(Fraction(x).denominator != 1 for x in poly.lam):
        raise ValueError("extremal weight vertices need an integral weight")
    star = rs.dual_weight(poly.lam)
    verts = set(poly.vform.vertices)
    out = {}
    for mu in sorted(rs.weyl_orbit(star)):
        pts = lattice_points(fiber_polytope(poly, mu))
        if len(pts) != 1:
            raise FiberNotSingleton(f"fiber over {mu} has {len(pts)} lattice points")
        if tuple(Fraction(x) for x in pts[0]) not in verts:
            raise FiberNotSingleton(f"point over {mu} is not a vertex")
        out[mu] = pts[0]
    return out
