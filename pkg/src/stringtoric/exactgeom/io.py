"""PORTA-style .ieq/.poi text files and JSON records."""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import UnsupportedFormat
from .polyhedra import HPolyhedron, VPolytope, fmt_rat

INFEASIBLE = "INFEASIBLE"


def _term(c: Fraction, j: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    coef = "" if mag == 1 else fmt_rat(mag)
    return f"{sign}{coef}x{j + 1}"


def _lhs(a) -> str:
    terms = []
    for j, c in enumerate(a):
        if c:
            terms.append(_term(c, j, not terms))
    return "".join(terms) if terms else "0"


def write_ieq(h: HPolyhedron | None, dim: int | None = None) -> str:
    """PORTA inequality file; ``None`` stands for an empty polyhedron."""
    d = h.dim if h is not None else dim
    lines = [f"DIM = {d}", ""]
    if h is None:
        lines += [INFEASIBLE, "", "END", ""]
        return "\n".join(lines)
    lines.append("INEQUALITIES_SECTION")
    k = 1
    for a, b in h.eqs:
        lines.append(f"({k:2d}) {_lhs(a)} == {fmt_rat(b)}")
        k += 1
    for a, b in h.ineqs:
        lines.append(f"({k:2d}) {_lhs(a)} <= {fmt_rat(b)}")
        k += 1
    lines += ["", "END", ""]
    return "\n".join(lines)


def write_poi(v: VPolytope | None, dim: int | None = None) -> str:
    d = v.dim if v is not None else dim
    lines = [f"DIM = {d}", ""]
    if v is None or v.is_empty:
        lines += [INFEASIBLE, "", "END", ""]
        return "\n".join(lines)
    lines.append("CONV_SECTION")
    for k, p in enumerate(v.vertices, 1):
        lines.append(f"({k:2d}) " + " ".join(fmt_rat(x) for x in p))
    if v.rays:
        lines += ["", "CONE_SECTION"]
        for k, p in enumerate(v.rays, 1):
            lines.append(f"({k:2d}) " + " ".join(fmt_rat(x) for x in p))
    lines += ["", "END", ""]
    return "\n".join(lines)


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*x(\d+)")
_LABEL = re.compile(r"^\(\s*\d+\)\s*")


def _parse_dim(lines) -> int:
    for ln in lines:
        m = re.match(r"DIM\s*=\s*(\d+)", ln)
        if m:
            return int(m.group(1))
    raise UnsupportedFormat("missing DIM header")


def _parse_lhs(text: str, dim: int):
    a = [Fraction(0)] * dim
    text = text.replace(" ", "")
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise UnsupportedFormat(f"cannot parse term near {text[pos:]!r}")
        pos = m.end()
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            c = -c
        a[int(m.group(3)) - 1] += c
    if pos != len(text) and text != "0":
        raise UnsupportedFormat(f"cannot parse {text!r}")
    return a


def read_ieq(text: str) -> HPolyhedron | None:
    """Parse a .ieq file; returns None for an INFEASIBLE marker."""
    lines = [ln.strip() for ln in text.splitlines()]
    dim = _parse_dim(lines)
    if INFEASIBLE in lines:
        return None
    ineqs, eqs = [], []
    inside = False
    for ln in lines:
        if ln == "INEQUALITIES_SECTION":
            inside = True
            continue
        if ln == "END":
            break
        if not inside or not ln:
            continue
        ln = _LABEL.sub("", ln)
        for op in ("==", "<=", ">=", "="):
            if op in ln:
                lhs, rhs = ln.split(op, 1)
                break
        else:
            raise UnsupportedFormat(f"no relation in {ln!r}")
        a, b = _parse_lhs(lhs, dim), Fraction(rhs.strip())
        if op in ("==", "="):
            eqs.append((a, b))
        elif op == ">=":
            ineqs.append(([-x for x in a], -b))
        else:
            ineqs.append((a, b))
    return HPolyhedron(dim, ineqs, eqs)


def read_poi(text: str) -> VPolytope | None:
    lines = [ln.strip() for ln in text.splitlines()]
    dim = _parse_dim(lines)
    if INFEASIBLE in lines:
        return None
    verts, rays, section = [], [], None
    for ln in lines:
        if ln in ("CONV_SECTION", "CONE_SECTION"):
            section = ln
            continue
        if ln == "END":
            break
        if section is None or not ln:
            continue
        pt = [Fraction(x) for x in _LABEL.sub("", ln).split()]
        (verts if section == "CONV_SECTION" else rays).append(pt)
    return VPolytope(dim, verts, rays)


def to_record(h: HPolyhedron | None = None, v: VPolytope | None = None) -> dict:
    """JSON-ready record {dim, ineqs, eqs, vertices, rays} with "p/q" strings."""
    dim = h.dim if h is not None else v.dim if v is not None else 0
    rec: dict = {"dim": dim}
    if h is not None:
        rec["ineqs"] = [[[fmt_rat(x) for x in a], fmt_rat(b)] for a, b in h.ineqs]
        rec["eqs"] = [[[fmt_rat(x) for x in a], fmt_rat(b)] for a, b in h.eqs]
    if v is not None:
        rec["vertices"] = [[fmt_rat(x) for x in p] for p in v.vertices]
        rec["rays"] = [[fmt_rat(x) for x in p] for p in v.rays]
    return rec


def from_record(rec: dict) -> tuple[HPolyhedron | None, VPolytope | None]:
    dim = rec["dim"]
    h = v = None
    if "ineqs" in rec:
        h = HPolyhedron(dim, [(a, b) for a, b in rec["ineqs"]], [(a, b) for a, b in rec.get("eqs", [])])
    if "vertices" in rec:
        v = VPolytope(dim, rec["vertices"], rec.get("rays", []))
    return h, v
