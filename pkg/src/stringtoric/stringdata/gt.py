"""Gelfand-Tsetlin patterns for the standard type A word.

Patterns are stored as tuples of rows ``g[1], ..., g[n]`` (row i has
n+1-i entries); the top row ``g[0]`` is the partition itself.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import ShapeMismatch
from ..exactgeom import HPolyhedron
from .cones import gt_position


def partition_to_weight(part: Sequence) -> tuple:
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(part, part[1:]))


def weight_to_partition(lam: Sequence) -> tuple:
    """Partition with last part 0 whose differences are lam."""
    out = [Fraction(0)]
    for x in reversed(lam):
        out.append(out[-1] + Fraction(x))
    return tuple(reversed(out))


def _check_shape(part, rows):
    n = len(part) - 1
    if len(rows) != n or any(len(r) != n + 1 - i for i, r in enumerate(rows, 1)):
        raise ShapeMismatch("pattern rows do not match the partition length")


def x_to_g(part: Sequence, x: Sequence) -> tuple:
    """String vector -> pattern rows, via g_{i,j} = lam_j + sum_{k<=i} (x_{k,j-1} - x_{k,j})."""
    part = [Fraction(p) for p in part]
    n = len(part) - 1
    if len(x) != n * (n + 1) // 2:
        raise ShapeMismatch("string vector length does not match the partition")

    def xv(k, j):
        if j < 1 or j > n + 1 - k:
            return Fraction(0)
        return Fraction(x[gt_position(n, k, j)])

    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(part[j - 1] + sum(xv(k, j - 1) - xv(k, j) for k in range(1, i + 1)) for j in range(1, n + 2 - i)))
    return tuple(rows)


def g_to_x(part: Sequence, rows: Sequence[Sequence]) -> tuple:
    """Pattern rows -> string vector, via x_{i,j} = sum_{k<=j} (g_{i-1,k} - g_{i,k})."""
    part = tuple(Fraction(p) for p in part)
    _check_shape(part, rows)
    n = len(part) - 1
    g = [part] + [tuple(Fraction(v) for v in r) for r in rows]
    x = [Fraction(0)] * (n * (n + 1) // 2)
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            x[gt_position(n, i, j)] = sum(g[i - 1][k] - g[i][k] for k in range(j))
    return tuple(x)


def gt_change_of_coords(direction: str, part: Sequence, values):
    """``direction`` is ``"x->g"`` or ``"g->x"``."""
    if direction == "x->g":
        return x_to_g(part, values)
    if direction == "g->x":
        return g_to_x(part, values)
    raise ValueError(f"unknown direction {direction!r}")


def gt_polytope(part: Sequence) -> HPolyhedron:
    """Interlacing inequalities written in pattern coordinates (row by row)."""
    part = [Fraction(p) for p in part]
    n = len(part) - 1
    idx = {}
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            idx[(i, j)] = len(idx)
    d = len(idx)
    ineqs = []

    def ge(a, b):
        # entry a >= entry b, entries are (i, j) or a top-row constant
        row = [Fraction(0)] * d
        rhs = Fraction(0)
        for sign, e in ((-1, a), (1, b)):
            if e[0] == 0:
                rhs -= sign * part[e[1] - 1]
            else:
                row[idx[e]] += sign
        ineqs.append((row, rhs))

    for i in range(0, n):
        for j in range(1, n + 1 - i):
            ge((i, j), (i + 1, j))
            ge((i + 1, j), (i, j + 1))
    return HPolyhedron(d, ineqs)


def _pattern_graph(n: int):
    nodes = [(i, j) for i in range(n + 1) for j in range(1, n + 2 - i)]
    edges = []
    for i in range(n):
        for j in range(1, n + 1 - i):
            edges.append(((i, j), (i + 1, j)))
            edges.append(((i + 1, j), (i, j + 1)))
    return nodes, edges


def gt_vertices(part: Sequence) -> list[tuple]:
    """Vertex patterns of GT(part), by filling entries with parts.

    Every vertex fills each entry with some part; a filling is a vertex iff
    each connected block of equal neighbouring entries reaches the top row.
    """
    part = tuple(Fraction(p) for p in part)
    n = len(part) - 1
    nodes, edges = _pattern_graph(n)
    values = sorted(set(part))
    found = set()
    g = {(0, j): part[j - 1] for j in range(1, n + 2)}
    order = [(i, j) for i in range(1, n + 1) for j in range(1, n + 2 - i)]

    def is_vertex():
        parent = {v: v for v in nodes}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in edges:
            if g[a] == g[b]:
                parent[find(a)] = find(b)
        tops = {find((0, j)) for j in range(1, n + 2)}
        return all(find(v) in tops for v in order)

    def rec(k):
        if k == len(order):
            if is_vertex():
                found.add(tuple(tuple(g[(i, j)] for j in range(1, n + 2 - i)) for i in range(1, n + 1)))
            return
        i, j = order[k]
        hi = g[(i - 1, j)]
        lo = g[(i - 1, j + 1)]
        for v in values:
            if lo <= v <= hi:
                g[(i, j)] = v
                rec(k + 1)
        del g[(i, j)]

    rec(0)
    return sorted(found)
