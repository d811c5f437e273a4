"""Exact rational polyhedral kernel."""

from .dd import dd_convert, extreme_points, facet_reduce, hull, polyhedron_dim, vform_to_hform
from .fans import common_refinement, face_lattice, faces, is_face_of
from .io import from_record, read_ieq, read_poi, to_record, write_ieq, write_poi
from .lattice import LatticeEnumerator, count_lattice_points, lattice_points
from .operations import (
    cone_from_rays,
    dilate,
    interior_lattice_points,
    is_integral,
    is_reflexive,
    is_simplicial_cone,
    is_unimodular_cone,
    minkowski_sum,
    polar_dual,
    same_set,
    tangent_cone,
)
from .polyhedra import ConeH, Fan, HPolyhedron, VPolytope, fmt_rat, parse_rat
from .projection import linear_image, project
from .volume import volume

__all__ = [
    "ConeH",
    "Fan",
    "HPolyhedron",
    "LatticeEnumerator",
    "VPolytope",
    "common_refinement",
    "cone_from_rays",
    "count_lattice_points",
    "dd_convert",
    "dilate",
    "extreme_points",
    "face_lattice",
    "faces",
    "facet_reduce",
    "fmt_rat",
    "from_record",
    "hull",
    "interior_lattice_points",
    "is_face_of",
    "is_integral",
    "is_reflexive",
    "is_simplicial_cone",
    "is_unimodular_cone",
    "lattice_points",
    "linear_image",
    "minkowski_sum",
    "parse_rat",
    "polar_dual",
    "polyhedron_dim",
    "project",
    "read_ieq",
    "read_poi",
    "same_set",
    "tangent_cone",
    "to_record",
    "vform_to_hform",
    "volume",
    "write_ieq",
    "write_poi",
]
