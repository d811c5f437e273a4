"""String cones, their providers, and the weight-dependent inequalities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from ..errors import ProviderMismatch, UnsupportedFormat
from ..exactgeom import ConeH, HPolyhedron, facet_reduce
from ..rootdata import RootSystem, build_root_system

BUILTIN_GT = "builtin-GT-A"
BUILTIN_C2 = "builtin-C2"
BUILTIN_E6 = "builtin-E6-suffix"
EXTERNAL = "external-file"
EMPIRICAL = "empirical-certified"

# letters of the 16-letter tail of the E6 word whose cone is known
E6_SUFFIX = (6, 2, 3, 1, 4, 5, 3, 4, 2, 3, 1, 6, 2, 3, 4, 5)


@dataclass(frozen=True)
class StringCone:
    """A word together with an irredundant H-form of its string cone.

    ``word`` is a reduced word of w0 except for the E6 suffix cone, whose
    word is only the tail of one (``partial`` is then set).
    """

    rs: RootSystem
    word: tuple
    cone: ConeH
    provenance: str
    certification: dict | None = field(default=None, compare=False)
    partial: bool = False
    source: str | None = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def trusted(self) -> bool:
        if self.provenance != EXTERNAL:
            return True
        cert = self.certification or {}
        return bool(cert.get("trusted") or cert.get("passed"))


def cone_from_rows(n: int, rows: Sequence[Sequence]) -> ConeH:
    """Facet-reduced cone ``{t : c.t >= 0 for c in rows}``."""
    h = HPolyhedron(n, [(tuple(-Fraction(x) for x in c), 0) for c in rows])
    red = facet_reduce(h)
    return ConeH(n, [(a, 0) for a, _ in red.ineqs], [(a, 0) for a, _ in red.eqs])


def _unit(n, *pairs):
    v = [0] * n
    for k, c in pairs:
        v[k - 1] += c
    return v


def _chain_rows(n: int, chain: Sequence[int], weights: Sequence[int] | None = None) -> list:
    """Rows for ``w1 t_{c1} >= w2 t_{c2} >= ... >= 0`` (1-based indices)."""
    w = weights or [1] * len(chain)
    rows = [_unit(n, (a, wa), (b, -wb)) for a, b, wa, wb in zip(chain, chain[1:], w, w[1:])]
    rows.append(_unit(n, (chain[-1], w[-1])))
    return rows


# ---------------------------------------------------------------------------
# type A standard word


def gt_position(n: int, i: int, j: int) -> int:
    """0-based word position of the coordinate x_{i,j} for the standard A_n word.

    Block b of the word (letters b, b-1, ..., 1) carries the row i = n+1-b.
    """
    b = n + 1 - i
    return b * (b - 1) // 2 + (b - j)


def gt_renaming(n: int) -> list[tuple[int, int]]:
    """For each word position, its (row, column) label x_{i,j}."""
    out = [None] * (n * (n + 1) // 2)
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            out[gt_position(n, i, j)] = (i, j)
    return out


def gt_cone_rows(n: int) -> list:
    """x_{i,n+1-i} >= ... >= x_{i,1} >= 0 for every row i."""
    N = n * (n + 1) // 2
    rows = []
    for i in range(1, n + 1):
        chain = [gt_position(n, i, j) + 1 for j in range(n + 1 - i, 0, -1)]
        rows += _chain_rows(N, chain)
    return rows


def c2_cone_rows(word: tuple) -> list:
    if word == (1, 2, 1, 2):
        return [_unit(4, (1, 1))] + _chain_rows(4, [2, 3, 4], [2, 1, 2])
    if word == (2, 1, 2, 1):
        return [_unit(4, (1, 1))] + _chain_rows(4, [2, 3, 4])
    raise ProviderMismatch(f"no built-in C2 cone for {word}")


def e6_suffix_rows() -> list:
    n = 16
    rows = []
    # main chain with the stacked pairs read as parallel branches
    rows += [_unit(n, (1, 1), (2, -1)), _unit(n, (2, 1), (3, -1))]
    for top, pair, bottom in ((3, (4, 5), 7), (7, (8, 9), 10), (10, (11, 13), 14)):
        for mid in pair:
            rows.append(_unit(n, (top, 1), (mid, -1)))
            rows.append(_unit(n, (mid, 1), (bottom, -1)))
    rows += _chain_rows(n, [14, 15, 16])
    rows += _chain_rows(n, [5, 6, 8])
    rows += _chain_rows(n, [9, 12, 13])
    return rows


def builtin_cone(rs: RootSystem, word: Sequence[int]) -> StringCone:
    """The printed cones: type A standard word, both C2 words, the E6 tail."""
    word = tuple(word)
    if rs.cartan_type == "A" and word == rs.standard_word:
        return StringCone(rs, word, cone_from_rows(len(word), gt_cone_rows(rs.rank)), BUILTIN_GT)
    if rs.name == "C2" and word in ((1, 2, 1, 2), (2, 1, 2, 1)):
        return StringCone(rs, word, cone_from_rows(4, c2_cone_rows(word)), BUILTIN_C2)
    if rs.name == "E6" and word == E6_SUFFIX:
        return StringCone(rs, word, cone_from_rows(16, e6_suffix_rows()), BUILTIN_E6, partial=True)
    raise ProviderMismatch(f"no built-in string cone for {rs.name} word {word}")


# ---------------------------------------------------------------------------
# external cone files


def parse_cone_file(text: str, trusted: bool = False, source: str | None = None) -> StringCone:
    """Read the ``STRINGCONE v1`` format (``ineq c1 ... cN`` means c.t >= 0)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != "STRINGCONE v1":
        raise UnsupportedFormat("missing 'STRINGCONE v1' header")
    rs = word = None
    rows = []
    for ln in lines[1:]:
        key, *rest = ln.split()
        if key == "type":
            rs = build_root_system(rest[0], int(rest[1]))
        elif key == "word":
            word = tuple(int(x) for x in rest)
        elif key == "ineq":
            rows.append([Fraction(x) for x in rest])
        else:
            raise UnsupportedFormat(f"unknown line {ln!r}")
    if rs is None or word is None:
        raise UnsupportedFormat("cone file needs 'type' and 'word' lines")
    if not rs.is_reduced(word):
        raise ProviderMismatch(f"{word} is not a reduced word of w0 in {rs.name}")
    if any(len(r) != len(word) for r in rows):
        raise UnsupportedFormat("inequality length differs from word length")
    cert = {"trusted": trusted}
    return StringCone(rs, word, cone_from_rows(len(word), rows), EXTERNAL, cert, source=source)


def load_cone_file(path: str | Path, trusted: bool = False) -> StringCone:
    return parse_cone_file(Path(path).read_text(), trusted, str(path))


def format_cone_file(sc: StringCone) -> str:
    """Write a cone in the ``STRINGCONE v1`` format."""
    out = ["STRINGCONE v1", f"type {sc.rs.cartan_type} {sc.rs.rank}", "word " + " ".join(map(str, sc.word))]
    for a, _ in sc.cone.ineqs:
        out.append("ineq " + " ".join(str(-x) for x in a))
    for a, _ in sc.cone.eqs:
        out.append("ineq " + " ".join(str(-x) for x in a))
        out.append("ineq " + " ".join(str(x) for x in a))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# weight inequalities


def lambda_coefficients(rs: RootSystem, word: Sequence[int]) -> list[list[int]]:
    """Row k: ``t_k + sum_{l>k} <alpha_{i_l}, alpha_{i_k}^vee> t_l``."""
    c = rs.cartan
    n = len(word)
    rows = []
    for k, ik in enumerate(word):
        row = [0] * n
        row[k] = 1
        for l in range(k + 1, n):
            row[l] = c[ik - 1][word[l] - 1]
        rows.append(row)
    return rows


def lambda_inequalities(rs: RootSystem, word: Sequence[int], lam: Sequence) -> HPolyhedron:
    """The N half-spaces cutting the string cone down to Q(lam)."""
    rows = lambda_coefficients(rs, word)
    return HPolyhedron(len(word), [(r, Fraction(lam[ik - 1])) for r, ik in zip(rows, word)])


def default_degree(rs: RootSystem) -> int:
    """Dilation degree used to build and certify empirical cones."""
    return 2 if rs.rank <= 3 else 1


def certify_external(sc: StringCone, degree: int | None = None) -> StringCone:
    """Attach a lattice-count certification to a cone read from a file."""
    from ..crystal import certify_cone

    report = certify_cone(sc, degree or default_degree(sc.rs))
    report["trusted"] = bool(sc.certification and sc.certification.get("trusted"))
    return StringCone(sc.rs, sc.word, sc.cone, sc.provenance, report, sc.partial, sc.source)


def string_cone(rs: RootSystem, word: Sequence[int], provider: str = "builtin", **kw) -> StringCone:
    """Dispatch to a cone provider: builtin, external (``path=``), empirical."""
    degree = kw.get("degree") or default_degree(rs)
    if provider == "builtin":
        return builtin_cone(rs, word)
    if provider == "external":
        sc = load_cone_file(kw["path"], kw.get("trusted", False))
        if sc.rs.name != rs.name or sc.word != tuple(word):
            raise ProviderMismatch(f"cone file is for {sc.rs.name} {sc.word}")
        return certify_external(sc, kw.get("degree")) if kw.get("certify", True) else sc
    if provider == "empirical":
        from ..crystal import empirical_string_cone

        return empirical_string_cone(rs, word, degree)
    if provider == "auto":
        try:
            return builtin_cone(rs, word)
        except ProviderMismatch:
            if rs.cartan_type != "A":
                raise
            from ..crystal import empirical_string_cone

            return empirical_string_cone(rs, word, degree)
    raise ProviderMismatch(f"unknown provider {provider!r}")
