"""Lattice point enumeration by recursive coordinate fixing.

The polyhedron is projected (Fourier-Motzkin, facet-reduced) onto every
prefix of the chosen coordinate order, so each partial assignment that
survives the bounds of one level extends to a rational point of the next.
The leading coordinates may be declared parameters: they are never
eliminated, so one set of projections serves a whole family of slices
(for instance every string polytope of a given cone).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import EmptyPolyhedron, Unbounded
from .intlin import lcm
from .polyhedra import HPolyhedron
from .projection import project


class LatticeEnumerator:
    """Integer points of the slices ``{x : (p, x) in h}`` for parameters p."""

    def __init__(self, h: HPolyhedron, nparams: int = 0, order: Sequence[int] | None = None):
        self.nparams = nparams
        nvars = h.dim - nparams
        self.order = list(range(nvars)) if order is None else list(order)
        if sorted(self.order) != list(range(nvars)):
            raise ValueError("order must be a permutation of the variable indices")
        self.nvars = nvars
        self.empty = False
        self.levels: list[HPolyhedron] = []
        if nvars == 0:
            return
        params = list(range(nparams))
        try:
            cur = project(h, params + [nparams + i for i in self.order])
        except EmptyPolyhedron:
            self.empty = True
            return
        levels = [cur]
        for k in range(nvars - 1, 0, -1):
            cur = project(cur, range(nparams + k))
            levels.append(cur)
        self.levels = levels[::-1]

    def _prepare(self, params: Sequence):
        p = [Fraction(x) for x in params]
        if len(p) != self.nparams:
            raise ValueError(f"expected {self.nparams} parameters")
        prepared = []
        for k, lev in enumerate(self.levels):
            upper, lower = [], []
            rows = [(a, b) for a, b in lev.ineqs]
            for a, b in lev.eqs:
                rows.append((a, b))
                rows.append((tuple(-x for x in a), -b))
            for a, b in rows:
                rhs = b - sum(a[i] * p[i] for i in range(self.nparams))
                coeffs = a[self.nparams:]
                den = rhs.denominator
                for x in coeffs:
                    den = lcm(den, x.denominator)
                alpha = int(coeffs[k] * den)
                prev = [(i, int(coeffs[i] * den)) for i in range(k) if coeffs[i]]
                r = int(rhs * den)
                if alpha > 0:
                    upper.append((alpha, prev, r))
                elif alpha < 0:
                    lower.append((-alpha, prev, r))
                elif not prev and r < 0:
                    return None
            prepared.append((upper, lower))
        return prepared

    def _walk(self, params: Sequence, count_only: bool):
        if self.nvars == 0:
            yield ()
            return
        if self.empty:
            return
        prepared = self._prepare(params)
        if prepared is None:
            return
        d = self.nvars
        x = [0] * d

        def bounds(k):
            upper, lower = prepared[k]
            if not upper or not lower:
                raise Unbounded("polyhedron has a ray")
            hi = None
            for alpha, prev, r in upper:
                s = r
                for i, c in prev:
                    s -= c * x[i]
                v = s // alpha
                if hi is None or v < hi:
                    hi = v
            lo = None
            for alpha, prev, r in lower:
                s = -r
                for i, c in prev:
                    s += c * x[i]
                v = -((-s) // alpha)
                if lo is None or v > lo:
                    lo = v
            return lo, hi

        def rec(k):
            lo, hi = bounds(k)
            if k == d - 1:
                if count_only:
                    if hi >= lo:
                        yield hi - lo + 1
                    return
                for v in range(lo, hi + 1):
                    x[k] = v
                    yield tuple(x)
                return
            for v in range(lo, hi + 1):
                x[k] = v
                yield from rec(k + 1)

        yield from rec(0)

    def count(self, params: Sequence = ()) -> int:
        if self.nvars == 0:
            return 0 if self.empty else 1
        return sum(self._walk(params, True))

    def points(self, params: Sequence = ()) -> list[tuple[int, ...]]:
        """Sorted integer points of the slice, in the original coordinate order."""
        out = []
        inv = [0] * self.nvars
        for pos, var in enumerate(self.order):
            inv[var] = pos
        for pt in self._walk(params, False):
            out.append(tuple(pt[inv[i]] for i in range(self.nvars)))
        out.sort()
        return out


def lattice_points(h: HPolyhedron, order: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """All integer points of a bounded polyhedron, sorted lexicographically.

    Raises Unbounded if the polyhedron has a recession direction.
    """
    if h.dim == 0:
        return [()] if all(b >= 0 for _, b in h.ineqs) and all(b == 0 for _, b in h.eqs) else []
    return LatticeEnumerator(h, 0, order).points()


def count_lattice_points(h: HPolyhedron, order: Sequence[int] | None = None) -> int:
    return LatticeEnumerator(h, 0, order).count()
