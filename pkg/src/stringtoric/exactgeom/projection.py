"""Fourier-Motzkin projection onto coordinate subspaces and linear images."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .dd import facet_reduce
from .intlin import integer_row, primitive
from .polyhedra import HPolyhedron

# re-run the facet reduction once a step leaves more rows than this
_REDUCE_AT = 60


def _int_rows(h: HPolyhedron):
    ineqs = [integer_row(tuple(a) + (b,)) for a, b in h.ineqs]
    eqs = [integer_row(tuple(a) + (b,)) for a, b in h.eqs]
    return ineqs, eqs


def _to_h(dim: int, ineqs, eqs) -> HPolyhedron:
    return HPolyhedron(dim, [(r[:-1], r[-1]) for r in ineqs], [(r[:-1], r[-1]) for r in eqs])


def _drop_col(rows, j):
    return [r[:j] + r[j + 1:] for r in rows]


def _eliminate(ineqs, eqs, hist, j):
    """Eliminate column j (rows are a_0..a_{d-1}, b meaning a.x <= b)."""
    piv = next((e for e in eqs if e[j]), None)
    if piv is not None:
        c = piv[j]
        sgn = 1 if c > 0 else -1
        new_eqs = [primitive([c * x - e[j] * y for x, y in zip(e, piv)]) for e in eqs if e is not piv]
        new_ineqs = [primitive([abs(c) * x - sgn * r[j] * y for x, y in zip(r, piv)]) for r in ineqs]
        return _drop_col(new_ineqs, j), _drop_col(new_eqs, j), hist
    pos, neg, keep, keep_hist = [], [], [], []
    for r, hs in zip(ineqs, hist):
        if r[j] > 0:
            pos.append((r, hs))
        elif r[j] < 0:
            neg.append((r, hs))
        else:
            keep.append(r)
            keep_hist.append(hs)
    seen = set(keep)
    for p, hp in pos:
        for q, hq in neg:
            hs = hp | hq
            row = primitive([p[j] * y - q[j] * x for x, y in zip(p, q)])
            if row in seen:
                continue
            seen.add(row)
            keep.append(row)
            keep_hist.append(hs)
    return _drop_col(keep, j), _drop_col(eqs, j), keep_hist


def project(h: HPolyhedron, keep: Sequence[int]) -> HPolyhedron:
    """Image of ``h`` under the coordinate projection onto ``keep``.

    Output coordinates follow the order of ``keep``; the result is
    facet-reduced. Raises EmptyPolyhedron when ``h`` is infeasible.
    """
    keep = list(keep)
    ineqs, eqs = _int_rows(h)
    cols = list(range(h.dim))
    drop = [c for c in range(h.dim) if c not in keep]
    hist = [1 << i for i in range(len(ineqs))]
    steps = 0
    for c in reversed(drop):
        j = cols.index(c)
        had_eq = any(e[j] for e in eqs)
        ineqs, eqs, hist = _eliminate(ineqs, eqs, hist, j)
        cols.pop(j)
        if not had_eq:
            steps += 1
            # Chernikov: a row built from more than steps+1 originals is redundant
            pairs = [(r, hs) for r, hs in zip(ineqs, hist) if hs.bit_count() <= steps + 1]
            ineqs = [r for r, _ in pairs]
            hist = [hs for _, hs in pairs]
        ineqs = _trivial_filter(ineqs)
        eqs = _trivial_filter(eqs, eq=True)
        if len(ineqs) > _REDUCE_AT and cols:
            red = facet_reduce(_to_h(len(cols), ineqs, eqs))
            ineqs, eqs = _int_rows(red)
            hist = [1 << i for i in range(len(ineqs))]
            steps = 0
    red = facet_reduce(_to_h(len(cols), ineqs, eqs))
    order = [cols.index(c) for c in keep]
    return HPolyhedron(
        len(keep),
        [(tuple(a[i] for i in order), b) for a, b in red.ineqs],
        [(tuple(a[i] for i in order), b) for a, b in red.eqs],
    )


def _trivial_filter(rows, eq=False):
    out = []
    for r in rows:
        if any(r[:-1]):
            out.append(tuple(r))
        elif (r[-1] != 0) if eq else (r[-1] < 0):
            # 0 <= b with b < 0: keep to signal infeasibility
            out.append(tuple(r))
    return out


def linear_image(h: HPolyhedron, matrix: Sequence[Sequence], offset: Sequence | None = None) -> HPolyhedron:
    """Image of ``h`` under ``x -> matrix.x + offset`` (facet-reduced)."""
    m = len(matrix)
    offset = [Fraction(0)] * m if offset is None else [Fraction(x) for x in offset]
    # lifted system in (y, x): y - M x = offset
    ineqs = [((0,) * m + tuple(a), b) for a, b in h.ineqs]
    eqs = [((0,) * m + tuple(a), b) for a, b in h.eqs]
    for i, row in enumerate(matrix):
        y = tuple(1 if k == i else 0 for k in range(m))
        eqs.append((y + tuple(-Fraction(x) for x in row), offset[i]))
    lifted = HPolyhedron(m + h.dim, ineqs, eqs)
    return project(lifted, range(m))
