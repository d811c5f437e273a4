"""Exact H- and V-representations of rational polyhedra."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimMismatch

Vector = tuple  # tuple[Fraction, ...]
Row = tuple  # (Vector, Fraction)


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(x) for x in values)


def fmt_rat(x) -> str:
    """Render an exact rational as ``p`` or ``p/q``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())


def _rows(dim: int, rows) -> tuple:
    out = []
    for a, b in rows:
        a = vec(a)
        if len(a) != dim:
            raise DimMismatch(f"row of length {len(a)} in dimension {dim}")
        out.append((a, Fraction(b)))
    return tuple(out)


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : a.x <= b for (a, b) in ineqs, a.x == b for (a, b) in eqs}``."""

    dim: int
    ineqs: tuple = ()
    eqs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ineqs", _rows(self.dim, self.ineqs))
        object.__setattr__(self, "eqs", _rows(self.dim, self.eqs))

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        x = vec(x)
        for a, b in self.eqs:
            if sum(ai * xi for ai, xi in zip(a, x)) != b:
                return False
        for a, b in self.ineqs:
            s = sum(ai * xi for ai, xi in zip(a, x))
            if s > b or (strict and s == b):
                return False
        return True

    def slack(self, x: Sequence) -> list[Fraction]:
        x = vec(x)
        return [b - sum(ai * xi for ai, xi in zip(a, x)) for a, b in self.ineqs]

    def intersect(self, other: "HPolyhedron") -> "HPolyhedron":
        if other.dim != self.dim:
            raise DimMismatch(f"{self.dim} != {other.dim}")
        return HPolyhedron(self.dim, self.ineqs + other.ineqs, self.eqs + other.eqs)

    def with_rows(self, ineqs=(), eqs=()) -> "HPolyhedron":
        return HPolyhedron(self.dim, self.ineqs + tuple(ineqs), self.eqs + tuple(eqs))

    @property
    def is_homogeneous(self) -> bool:
        return all(b == 0 for _, b in self.ineqs + self.eqs)

    def substitute(self, fixed: dict[int, Fraction]) -> "HPolyhedron":
        """Fix some coordinates and drop them from the ambient space."""
        keep = [i for i in range(self.dim) if i not in fixed]

        def conv(a, b):
            b = b - sum(a[i] * Fraction(v) for i, v in fixed.items())
            return tuple(a[i] for i in keep), b

        return HPolyhedron(
            len(keep),
            [conv(a, b) for a, b in self.ineqs],
            [conv(a, b) for a, b in self.eqs],
        )


class ConeH(HPolyhedron):
    """A polyhedral cone: every right-hand side is zero."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_homogeneous:
            raise ValueError("cone rows must have zero right-hand side")

    @classmethod
    def from_normals(cls, dim: int, normals=(), eq_normals=()) -> "ConeH":
        return cls(dim, [(a, 0) for a in normals], [(a, 0) for a in eq_normals])


@dataclass(frozen=True)
class VPolytope:
    """Vertices plus recession rays (and lines, for non-pointed polyhedra)."""

    dim: int
    vertices: tuple = ()
    rays: tuple = ()
    lines: tuple = ()

    def __post_init__(self):
        for name in ("vertices", "rays", "lines"):
            pts = tuple(vec(p) for p in getattr(self, name))
            for p in pts:
                if len(p) != self.dim:
                    raise DimMismatch(f"point of length {len(p)} in dimension {self.dim}")
            object.__setattr__(self, name, pts)

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lines

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def sorted(self) -> "VPolytope":
        return VPolytope(self.dim, sorted(self.vertices), sorted(self.rays), sorted(self.lines))

    def scaled(self, n) -> "VPolytope":
        n = Fraction(n)
        return VPolytope(self.dim, [tuple(n * x for x in v) for v in self.vertices], self.rays, self.lines)


@dataclass(frozen=True)
class Fan:
    dim: int
    maximal_cones: tuple
    support: ConeH
    rays: tuple = field(default=(), compare=False)

    @property
    def is_trivial(self) -> bool:
        return len(self.maximal_cones) == 1
