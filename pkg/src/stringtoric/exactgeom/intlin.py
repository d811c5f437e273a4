"""Exact integer/rational linear algebra helpers.

Everything here works on plain Python ``int`` and ``Fraction`` values; no
floating point is ever involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            return tuple(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def integer_row(values: Iterable) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    vals = [Fraction(x) for x in values]
    den = 1
    for x in vals:
        den = lcm(den, x.denominator)
    return primitive([int(x * den) for x in vals])


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational or integer matrix (fraction-free elimination)."""
    mat = [list(integer_row(r)) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r]
        for i in range(r + 1, len(mat)):
            q = mat[i][c]
            if q:
                row = mat[i]
                mat[i] = list(primitive([p[c] * row[k] - q * p[k] for k in range(ncols)]))
        r += 1
        if r == len(mat):
            break
    return r


def rref(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Reduced row echelon form over Q with zero rows dropped."""
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return [row for row in mat[:r]]


def nullspace(rows: Sequence[Sequence], n: int) -> list[tuple[int, ...]]:
    """Integer vectors spanning {x : rows . x = 0} over Q (not a lattice basis)."""
    red = rref(rows) if rows else []
    pivots = []
    for row in red:
        pivots.append(next(i for i, x in enumerate(row) if x != 0))
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(integer_row(v))
    return basis


def kernel_lattice_basis(rows: Sequence[Sequence], n: int) -> list[tuple[int, ...]]:
    """A Z-basis of the lattice {x in Z^n : rows . x = 0}.

    Column operations by extended gcd bring the integer matrix to column
    echelon form while tracking a unimodular transform; the transformed
    columns sitting over zero columns span the kernel lattice.
    """
    mat = [list(integer_row(r)) for r in rows if any(r)]
    # columns of the unimodular transform U, kept as rows of ``cols``
    cols = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    # work on the transpose: each "column" c holds (A[:,c], U[:,c])
    work = [[row[c] for row in mat] for c in range(n)]
    m = len(mat)
    start = 0
    for r in range(m):
        while True:
            nz = [c for c in range(start, n) if work[c][r] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda c: abs(work[c][r]))
            for c in nz:
                if c == piv:
                    continue
                q = work[c][r] // work[piv][r]
                if q:
                    work[c] = [x - q * y for x, y in zip(work[c], work[piv])]
                    cols[c] = [x - q * y for x, y in zip(cols[c], cols[piv])]
        nz = [c for c in range(start, n) if work[c][r] != 0]
        if nz:
            c = nz[0]
            work[start], work[c] = work[c], work[start]
            cols[start], cols[c] = cols[c], cols[start]
            start += 1
    return [tuple(cols[c]) for c in range(start, n)]


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Solve ``matrix . x = rhs`` exactly; None if inconsistent.

    Underdetermined systems return the solution with free variables at 0.
    """
    n = len(matrix[0]) if matrix else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    red = rref(aug)
    x = [Fraction(0)] * n
    for row in red:
        p = next(i for i, v in enumerate(row) if v != 0)
        if p == n:
            return None
        x[p] = row[n]
    return x


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant over Q by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        pv = m[c][c]
        result *= pv
        for i in range(c + 1, n):
            f = m[i][c] / pv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * result
