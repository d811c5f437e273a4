"""Type A crystal of semistandard tableaux, used as an independent oracle.

Elements are tableaux stored as tuples of rows. Kashiwara operators act on
the row reading word (rows from bottom to top, each left to right) by the
bracket rule: an ``i+1`` followed later by an ``i`` cancel, ``f_i`` changes
the rightmost unpaired ``i`` and ``e_i`` the leftmost unpaired ``i+1``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CertificationFailed, ShapeTooTall
from .exactgeom import cone_from_rays, facet_reduce
from .exactgeom.intlin import integer_row
from .exactgeom.polyhedra import ConeH
from .rootdata import RootSystem

Tableau = tuple  # tuple of weakly increasing rows


def weight_to_partition(lam: Sequence[int]) -> tuple[int, ...]:
    out = [0]
    for x in reversed(lam):
        out.append(out[-1] + int(x))
    return tuple(reversed(out))


def partition_to_weight(part: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(part, part[1:]))


def semistandard_tableaux(shape: Sequence[int], n_letters: int) -> Iterator[Tableau]:
    """All SSYT of the given shape with entries 1..n_letters (lex order)."""
    shape = [s for s in shape if s > 0]
    rows: list[list[int]] = []

    def fill_row(r: int, c: int, row: list[int]):
        if c == shape[r]:
            rows.append(row[:])
            yield from fill_rows(r + 1)
            rows.pop()
            return
        lo = row[-1] if row else 1
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        # leave room for the rows below in this column
        below = sum(1 for s in shape[r + 1:] if s > c)
        for v in range(lo, n_letters - below + 1):
            row.append(v)
            yield from fill_row(r, c + 1, row)
            row.pop()

    def fill_rows(r: int):
        if r == len(shape):
            yield tuple(tuple(x) for x in rows)
            return
        yield from fill_row(r, 0, [])

    yield from fill_rows(0)


def reading_word(t: Tableau) -> list[int]:
    return [x for row in reversed(t) for x in row]


def from_reading_word(word: Sequence[int], shape: Sequence[int]) -> Tableau:
    rows = []
    pos = 0
    for s in reversed([s for s in shape if s > 0]):
        rows.append(tuple(word[pos:pos + s]))
        pos += s
    return tuple(reversed(rows))


def _unpaired(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of unpaired ``i+1`` (left) and unpaired ``i`` (right)."""
    open_up: list[int] = []
    free_low: list[int] = []
    for p, x in enumerate(word):
        if x == i + 1:
            open_up.append(p)
        elif x == i:
            if open_up:
                open_up.pop()
            else:
                free_low.append(p)
    return open_up, free_low


def _raise_all(word: list[int], i: int) -> int:
    """Apply e_i as often as possible in place; returns epsilon_i."""
    ups, _ = _unpaired(word, i)
    for p in ups:
        word[p] = i
    return len(ups)


@dataclass(frozen=True)
class CrystalElement:
    tableau: Tableau

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.tableau)

    def content(self, n_letters: int) -> tuple[int, ...]:
        c = [0] * n_letters
        for row in self.tableau:
            for x in row:
                c[x - 1] += 1
        return tuple(c)

    def weight(self, rank: int) -> tuple[int, ...]:
        c = self.content(rank + 1)
        return tuple(c[j] - c[j + 1] for j in range(rank))

    def epsilon(self, i: int) -> int:
        return len(_unpaired(reading_word(self.tableau), i)[0])

    def phi(self, i: int) -> int:
        return len(_unpaired(reading_word(self.tableau), i)[1])

    def e(self, i: int) -> "CrystalElement | None":
        w = reading_word(self.tableau)
        ups, _ = _unpaired(w, i)
        if not ups:
            return None
        w[ups[0]] = i
        return CrystalElement(from_reading_word(w, self.shape))

    def f(self, i: int) -> "CrystalElement | None":
        w = reading_word(self.tableau)
        _, lows = _unpaired(w, i)
        if not lows:
            return None
        w[lows[-1]] = i + 1
        return CrystalElement(from_reading_word(w, self.shape))


@dataclass
class CrystalGraph:
    rank: int
    partition: tuple
    elements: list  # CrystalElement, lex order of tableaux
    edges: dict = field(repr=False)  # (index, i) -> index of f_i

    @property
    def highest(self) -> CrystalElement:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)


def build_crystal(part: Sequence[int], rank: int) -> CrystalGraph:
    """The crystal B(part) of sl_{rank+1}, with its f_i arrows."""
    part = tuple(int(x) for x in part)
    if sum(1 for x in part if x) > rank + 1:
        raise ShapeTooTall(f"{part} has more than {rank + 1} rows")
    part = tuple(x for x in part if x)
    elems = [CrystalElement(t) for t in semistandard_tableaux(part, rank + 1)]
    if not elems:
        elems = [CrystalElement(())]
    index = {b.tableau: k for k, b in enumerate(elems)}
    edges = {}
    for k, b in enumerate(elems):
        for i in range(1, rank + 1):
            c = b.f(i)
            if c is not None:
                edges[(k, i)] = index[c.tableau]
    # the row-constant tableau is lexicographically first and must be the only source
    sources = [k for k, b in enumerate(elems) if all(b.epsilon(i) == 0 for i in range(1, rank + 1))]
    if sources != [0]:
        raise AssertionError(f"unexpected highest weight elements {sources}")
    # connectivity from the source along f-arrows
    seen = {sources[0]}
    queue = deque(seen)
    while queue:
        k = queue.popleft()
        for i in range(1, rank + 1):
            j = edges.get((k, i))
            if j is not None and j not in seen:
                seen.add(j)
                queue.append(j)
    if len(seen) != len(elems):
        raise AssertionError("crystal graph is not connected")
    return CrystalGraph(rank, part, elems, edges)


def string_coords(b: CrystalElement, word: Sequence[int]) -> tuple[int, ...]:
    """``t_k = epsilon_{i_k}`` of the element after raising along earlier letters."""
    w = reading_word(b.tableau)
    return tuple(_raise_all(w, i) for i in word)


def _strings_of_tableaux(tabs: Sequence[Tableau], word: Sequence[int]) -> list[tuple[int, ...]]:
    out = []
    for t in tabs:
        w = reading_word(t)
        out.append(tuple(_raise_all(w, i) for i in word))
    return out


def crystal_strings(part: Sequence[int], rank: int, word: Sequence[int]) -> list[tuple[int, ...]]:
    return _strings_of_tableaux(list(semistandard_tableaux(part, rank + 1)), word)


def crystal_weight_mult(part: Sequence[int], mu: Sequence[int], rank: int | None = None) -> int:
    """Number of tableaux of shape ``part`` whose weight is mu (fundamental coords)."""
    rank = len(mu) if rank is None else rank
    if any(Fraction(x).denominator != 1 for x in mu):
        return 0
    mu = tuple(int(x) for x in mu)
    count = 0
    for t in semistandard_tableaux(part, rank + 1):
        if CrystalElement(t).weight(rank) == mu:
            count += 1
    return count


def crystal_lattice_check(rs: RootSystem, lam: Sequence[int], word: Sequence[int], cone) -> dict:
    """Compare crystal strings of B(lam) with the lattice points of Q(lam)."""
    from .stringdata.polytopes import string_polytope

    part = weight_to_partition(lam)
    strings = crystal_strings(part, rs.rank, word)
    pts = string_polytope(cone, tuple(lam)).lattice_points
    sset, pset = set(strings), set(pts)
    return {
        "lambda": list(lam),
        "word": list(word),
        "crystal_size": len(strings),
        "lattice_points": len(pts),
        "injective": len(sset) == len(strings),
        "missing_from_polytope": sorted(sset - pset),
        "extra_in_polytope": sorted(pset - sset),
        "equal": sset == pset and len(sset) == len(strings),
    }


# ---------------------------------------------------------------------------
# empirical string cones


def conic_hull(dim: int, points: Sequence[Sequence[int]]) -> ConeH:
    """Facet-reduced cone generated by integer points, built incrementally.

    Starts from the coordinate-extreme points and adds violators of the
    current H-form until every point is inside.
    """
    from .exactgeom.intlin import primitive

    dirs = sorted({primitive(p) for p in points if any(p)})
    if not dirs:
        return ConeH(dim, [], [(tuple(1 if i == j else 0 for j in range(dim)), 0) for i in range(dim)])
    chosen = set()
    for k in range(dim):
        key = lambda v: (Fraction(v[k], max(1, sum(map(abs, v)))), v)  # noqa: E731
        chosen.add(max(dirs, key=key))
        chosen.add(min(dirs, key=key))
    chosen |= set(dirs[:: max(1, len(dirs) // 40)])
    while True:
        c = cone_from_rays(dim, sorted(chosen))
        bad = []
        for a in (integer_row(a) for a, _ in c.ineqs):
            worst = max(dirs, key=lambda v: sum(x * y for x, y in zip(a, v)))
            if sum(x * y for x, y in zip(a, worst)) > 0:
                bad.append(worst)
        for a in (integer_row(a) for a, _ in c.eqs):
            for v in dirs:
                if sum(x * y for x, y in zip(a, v)) != 0:
                    bad.append(v)
                    break
        if not bad:
            return c
        chosen |= set(bad)


def _dominant_box(rank: int, d: int):
    from itertools import product

    return [tuple(x) for x in product(range(d + 1), repeat=rank)]


def certify_cone(cone, d: int) -> dict:
    """Lattice counts of cone cut at every dominant lam with coords <= d."""
    from .stringdata.polytopes import LatticeCounter

    rs = cone.rs
    counter = LatticeCounter(cone)
    failures = []
    checked = 0
    for lam in _dominant_box(rs.rank, d):
        got, want = counter.count(lam), rs.weyl_dim(lam)
        checked += 1
        if got != want:
            failures.append({"lambda": list(lam), "lattice_points": got, "weyl_dim": want})
    return {"degree": d, "weights_checked": checked, "failures": failures, "passed": not failures}


def empirical_string_cone(rs: RootSystem, word: Sequence[int], degree: int = 2, stability: bool = True):
    """Conic hull of crystal strings, certified by lattice counts.

    Strings of B(d*rho) are used: every string of B(lam) with lam <= d*rho
    coordinatewise also occurs there, and the certification below would
    catch a cone that is too small. Stability means that every string of
    B((d+1)*rho) already lies in the cone.
    """
    from .stringdata.cones import EMPIRICAL, StringCone

    if rs.cartan_type != "A":
        raise CertificationFailed("empirical cones are only available in type A")
    word = tuple(word)
    if not rs.is_reduced(word):
        from .errors import NotReduced

        raise NotReduced(f"{word} is not a reduced word of w0")
    n = len(word)
    part = weight_to_partition((degree,) * rs.rank)
    strings = crystal_strings(part, rs.rank, word)
    cone = conic_hull(n, strings)
    cone = ConeH(n, *_reduced_rows(cone))
    report = {"degree": degree, "strings": len(strings)}
    if stability:
        bigger = crystal_strings(weight_to_partition((degree + 1,) * rs.rank), rs.rank, word)
        rows = [integer_row(a) for a, _ in cone.ineqs]
        eqs = [integer_row(a) for a, _ in cone.eqs]
        outside = sum(
            1
            for s in bigger
            if any(sum(x * y for x, y in zip(r, s)) > 0 for r in rows)
            or any(sum(x * y for x, y in zip(r, s)) for r in eqs)
        )
        report["stability_strings"] = len(bigger)
        report["stable"] = outside == 0
    sc = StringCone(rs, word, cone, EMPIRICAL)
    cert = certify_cone(sc, degree)
    report.update(cert)
    report["passed"] = cert["passed"] and report.get("stable", True)
    if not report["passed"]:
        from .errors import UncertifiedEmpirical

        raise UncertifiedEmpirical(f"empirical cone for {word} failed certification: {report}")
    return StringCone(rs, word, cone, EMPIRICAL, report)


def _reduced_rows(cone: ConeH):
    red = facet_reduce(cone)
    return [(a, 0) for a, _ in red.ineqs], [(a, 0) for a, _ in red.eqs]


def crystal_dump(part: Sequence[int], rank: int, words: Sequence[Sequence[int]]) -> str:
    """JSON list of tableaux with their string coordinates per word."""
    tabs = list(semistandard_tableaux(part, rank + 1))
    per_word = {",".join(map(str, w)): _strings_of_tableaux(tabs, w) for w in words}
    out = []
    for k, t in enumerate(tabs):
        out.append({
            "tableau": [list(r) for r in t],
            "weight": list(CrystalElement(t).weight(rank)),
            "strings": {key: list(v[k]) for key, v in per_word.items()},
        })
    return json.dumps(out, indent=1)
