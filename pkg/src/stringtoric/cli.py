"""Command-line front end.

Every command builds a report (a plain dict) that is rendered as JSON, CSV,
PORTA or text. Output depends only on the invocation: timings are omitted
unless ``--timing`` is given, and all collections are emitted sorted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import crystal
from .errors import CertificationFailed, EmptyPolyhedron, StringToricError, UnsupportedFormat, UsageError
from .exactgeom import (
    HPolyhedron,
    VPolytope,
    dd_convert,
    facet_reduce,
    fmt_rat,
    is_integral,
    is_reflexive,
    lattice_points,
    read_ieq,
    read_poi,
    to_record,
    vform_to_hform,
    write_ieq,
    write_poi,
)
from .rootdata import RootSystem, build_root_system, parse_type
from .stringdata import (
    EXTERNAL,
    StringCone,
    anticanonical_check,
    e6_counterexample,
    extremal_weight_vertices,
    fan_summary,
    fiber_polytope,
    fiber_volume,
    highest_weight_vertex,
    hw_tangent_cone_check,
    string_cone,
    string_fan,
    string_polytope,
)

SCHEMA = "spw-report/1"
COMMANDS = ("info", "cone", "polytope", "census", "fan", "fiber", "anticanonical", "e6", "crystal-check", "emit")
FORMATS = ("json", "csv", "porta", "text")
PROVIDERS = ("auto", "builtin", "external", "empirical")


@dataclass
class Invocation:
    command: str
    system: str | None = None
    word: str | None = None
    lam: tuple | None = None
    mu: tuple | None = None
    provider: str = "auto"
    cone_file: str | None = None
    fmt: str = "json"
    trust_external: bool = False
    degree: int | None = None
    sample: int | None = None
    jobs: int = 1
    n: int = 6
    kind: str = "ieq"
    input: str | None = None
    timing: bool = False
    budget: str | None = None
    cone_files: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stringtoric", description="String polytopes of reduced words.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("system", nargs="?", help="root system such as A3, C2 or E6 (or an input file for emit)")
    p.add_argument("--word", help="comma-separated letters, 'standard' or 'all'")
    p.add_argument("--lambda", dest="lam", help="dominant weight in fundamental coordinates")
    p.add_argument("--partition", help="type A weight as a partition, e.g. 2,1,0")
    p.add_argument("--mu", help="weight of the fiber (fiber command)")
    p.add_argument("--provider", default=None, choices=PROVIDERS)
    p.add_argument("--cone-file", help="STRINGCONE v1 file for the external provider")
    p.add_argument("--trust-external", action="store_true")
    p.add_argument("--degree", type=int, help="dilation degree for empirical cones")
    p.add_argument("--format", dest="fmt", default="json", choices=FORMATS)
    p.add_argument("--sample", type=int, help="census over the standard word and k-1 evenly spaced others")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for census")
    p.add_argument("--n", type=int, default=6, help="dilation factor (e6 command)")
    p.add_argument("--kind", default="ieq", choices=("ieq", "poi"), help="PORTA file kind")
    p.add_argument("--budget", help="budget overrides, an integer or key=value list")
    p.add_argument("--config", help="key=value file with defaults")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")
    return p


def read_config(path: str) -> dict:
    """Parse ``key = value`` lines; ``cone.<type>.<word> = path`` declares cone files."""
    out: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"--config: line {lineno} is not key = value")
            key, val = (x.strip() for x in line.split("=", 1))
            out[key] = val.strip('"')
    return out


def _parse_tuple(flag: str, text: str, rank: int | None = None) -> tuple:
    try:
        vals = [Fraction(p) for p in text.replace(" ", "").split(",") if p]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag}: cannot parse {text!r}") from None
    if rank is not None and len(vals) != rank:
        raise UsageError(f"{flag}: expected {rank} coordinates, got {len(vals)}")
    return tuple(int(v) if v.denominator == 1 else v for v in vals)


def parse(argv: Sequence[str]) -> Invocation:
    """Validate argv into an Invocation; problems raise UsageError naming the flag."""
    ns = _build_parser().parse_args(list(argv))
    conf = read_config(ns.config) if ns.config else {}
    inv = Invocation(ns.command, fmt=ns.fmt, trust_external=ns.trust_external, timing=ns.timing)
    inv.provider = ns.provider or conf.get("provider", "auto")
    if inv.provider not in PROVIDERS:
        raise UsageError(f"--provider: unknown provider {inv.provider!r}")
    inv.cone_file = ns.cone_file
    inv.cone_files = {k[5:]: v for k, v in conf.items() if k.startswith("cone.")}
    inv.trust_external = inv.trust_external or conf.get("trust_external", "").lower() in ("1", "true", "yes")
    inv.degree, inv.sample, inv.n, inv.kind = ns.degree, ns.sample, ns.n, ns.kind
    inv.budget = ns.budget or conf.get("budget")
    if ns.jobs < 1:
        raise UsageError("--jobs: must be at least 1")
    inv.jobs = ns.jobs

    if inv.command == "emit" and ns.system and os.path.exists(ns.system):
        inv.input = ns.system
        return inv
    if inv.command == "e6":
        inv.system = "E6"
        if inv.n < 1:
            raise UsageError("--n: must be a positive integer")
        return inv
    if not ns.system:
        raise UsageError(f"{inv.command}: a root system argument is required")
    try:
        kind, rank = parse_type(ns.system)
        rs = build_root_system(kind, rank)
    except StringToricError as exc:
        raise UsageError(f"system: {exc}") from None
    inv.system = rs.name

    word = ns.word or ("all" if inv.command == "census" else "standard" if rs.cartan_type == "A" else None)
    if word == "all" and inv.command != "census":
        raise UsageError("--word: 'all' is only allowed with census")
    if inv.sample is not None and inv.command != "census":
        raise UsageError("--sample: only allowed with census")
    if inv.sample is not None and inv.sample < 1:
        raise UsageError("--sample: must be positive")
    if word is None and inv.command not in ("info",):
        raise UsageError(f"--word: required for {rs.name}")
    if word not in (None, "all", "standard"):
        letters = _parse_tuple("--word", word)
        if any(not isinstance(x, int) or not 1 <= x <= rs.rank for x in letters):
            raise UsageError(f"--word: letters must lie in 1..{rs.rank}")
        if not rs.is_reduced(letters):
            raise UsageError(f"--word: {word} is not a reduced word of the longest element")
    if word == "standard" and rs.cartan_type != "A":
        raise UsageError("--word: 'standard' is only defined in type A")
    inv.word = word

    if ns.lam and ns.partition:
        raise UsageError("--partition: give either --lambda or --partition")
    if ns.partition:
        if rs.cartan_type != "A":
            raise UsageError("--partition: only meaningful in type A")
        part = _parse_tuple("--partition", ns.partition, rs.rank + 1)
        if any(a < b for a, b in zip(part, part[1:])):
            raise UsageError("--partition: parts must be weakly decreasing")
        inv.lam = tuple(a - b for a, b in zip(part, part[1:]))
    elif ns.lam:
        inv.lam = _parse_tuple("--lambda", ns.lam, rs.rank)
    if inv.lam is not None and any(x < 0 for x in inv.lam):
        raise UsageError("--lambda: weight must be dominant")
    if inv.command in ("polytope", "census", "fiber", "crystal-check") and inv.lam is None:
        raise UsageError(f"--lambda: required for {inv.command}")
    if inv.command == "emit" and inv.lam is None and inv.kind in ("ieq", "poi") and inv.word is None:
        raise UsageError("emit: needs an input file or a polytope")
    if ns.mu:
        inv.mu = _parse_tuple("--mu", ns.mu, rs.rank)
    if inv.provider == "external" and not (inv.cone_file or inv.cone_files):
        raise UsageError("--cone-file: required with the external provider")
    if inv.provider == "builtin" and word == "all":
        raise UsageError("--provider: builtin cones exist only for single words")
    return inv


# ---------------------------------------------------------------------------
# execution helpers


def _rs(inv: Invocation) -> RootSystem:
    return build_root_system(inv.system)


def _word(rs: RootSystem, text: str) -> tuple:
    return rs.standard_word if text == "standard" else tuple(int(x) for x in text.split(","))


def _cone_file_for(inv: Invocation, rs: RootSystem, word: tuple) -> str | None:
    if inv.cone_file:
        return inv.cone_file
    return inv.cone_files.get(f"{rs.name}." + ",".join(map(str, word)))


def _cone(inv: Invocation, rs: RootSystem, word: tuple) -> StringCone:
    if inv.provider == "external":
        path = _cone_file_for(inv, rs, word)
        if path is None:
            raise UsageError(f"--cone-file: no cone file declared for {word}")
        sc = string_cone(rs, word, "external", path=path, trusted=inv.trust_external,
                         certify=not inv.trust_external, degree=inv.degree)
        if not sc.trusted:
            raise CertificationFailed(f"cone file {path} failed certification; pass --trust-external to use it")
        return sc
    return string_cone(rs, word, inv.provider, degree=inv.degree)


def _stamp(sc: StringCone, inv: Invocation) -> dict:
    out = {"provenance": sc.provenance}
    if sc.source:
        out["source"] = sc.source
    if sc.provenance == EXTERNAL:
        out["trust_external"] = inv.trust_external
    if sc.certification is not None:
        out["certification"] = sc.certification
    return out


def _rats(v) -> list:
    return [fmt_rat(Fraction(x)) for x in v]


def _sample(words: list, rs: RootSystem, k: int) -> list:
    """Standard (or first) word plus k-1 evenly spaced others, in enumeration order."""
    first = rs.standard_word if rs.cartan_type == "A" else words[0]
    rest = [w for w in words if w != first]
    if k - 1 >= len(rest):
        picked = rest
    else:
        picked = [rest[(j * len(rest)) // (k - 1)] for j in range(k - 1)] if k > 1 else []
    return [first] + picked


def polytope_summary(sc: StringCone, lam: tuple) -> dict:
    poly = string_polytope(sc, lam)
    v = poly.vform
    integral = is_integral(v)
    return {
        "vertices": len(v.vertices),
        "facets": len(poly.facets.ineqs),
        "lattice_points": len(poly.lattice_points),
        "integral": integral,
    }


def _census_job(args) -> dict:
    inv, word = args
    rs = _rs(inv)
    sc = _cone(inv, rs, word)
    row = {"word": list(word), **_stamp(sc, inv)}
    row.update(polytope_summary(sc, inv.lam))
    return row


# ---------------------------------------------------------------------------
# commands


def cmd_info(inv: Invocation) -> dict:
    rs = _rs(inv)
    out = {
        "rank": rs.rank,
        "cartan_matrix": [list(map(int, r)) for r in rs.cartan],
        "positive_roots": rs.num_positive_roots,
        "longest_element_word": list(rs.w0_word),
        "minuscule": [list(w) for w in sorted(rs.minuscule_weights())],
        "cominuscule": [list(w) for w in sorted(rs.cominuscule_weights())],
    }
    if rs.cartan_type == "A":
        out["standard_word"] = list(rs.standard_word)
    if inv.word not in (None, "standard", "all"):
        word = _word(rs, inv.word)
        out["word"] = list(word)
        out["beta_sequence"] = [list(b) for b in rs.beta_sequence(word)]
    if inv.lam is not None:
        out["weyl_dim"] = rs.weyl_dim(inv.lam)
        out["dual_weight"] = list(rs.dual_weight(inv.lam))
    return out


def cmd_cone(inv: Invocation) -> dict:
    rs = _rs(inv)
    sc = _cone(inv, rs, _word(rs, inv.word))
    gens = dd_convert(sc.cone)
    return {
        **_stamp(sc, inv),
        "word": list(sc.word),
        "facets": len(sc.cone.ineqs),
        "inequalities": [_rats(-x for x in a) for a, _ in sc.cone.ineqs],
        "equations": [_rats(a) for a, _ in sc.cone.eqs],
        "rays": [_rats(r) for r in gens.rays],
        "_porta": sc.cone,
    }


def cmd_polytope(inv: Invocation) -> dict:
    rs = _rs(inv)
    sc = _cone(inv, rs, _word(rs, inv.word))
    poly = string_polytope(sc, inv.lam)
    v = poly.vform
    integral = is_integral(v)
    out = {**_stamp(sc, inv), "word": list(sc.word), "lambda": _rats(inv.lam)}
    out.update(polytope_summary(sc, inv.lam))
    out["reflexive"] = is_reflexive(v) if integral else False
    if all(Fraction(x).denominator == 1 for x in inv.lam):
        q = highest_weight_vertex(rs, sc.word, inv.lam)
        out["highest_weight_vertex"] = _rats(q)
        out["highest_weight_vertex_is_vertex"] = q in set(v.vertices)
        out["weyl_dim"] = rs.weyl_dim(inv.lam)
    out["vertex_list"] = [_rats(p) for p in v.vertices]
    out["_porta"] = poly.facets if inv.kind == "ieq" else v
    return out


def cmd_census(inv: Invocation) -> dict:
    rs = _rs(inv)
    if inv.word == "all":
        words = sorted(rs.all_reduced_words())
        if inv.sample is not None:
            words = _sample(words, rs, inv.sample)
    else:
        words = [_word(rs, inv.word)]
    jobs = [(inv, w) for w in words]
    if inv.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=inv.jobs) as pool:
            rows = list(pool.map(_census_job, jobs))
    else:
        rows = [_census_job(j) for j in jobs]
    return {
        "lambda": _rats(inv.lam),
        "words": len(rows),
        "vertex_counts": sorted({r["vertices"] for r in rows}),
        "facet_counts": sorted({r["facets"] for r in rows}),
        "vertices_min": min(r["vertices"] for r in rows),
        "vertices_max": max(r["vertices"] for r in rows),
        "facets_min": min(r["facets"] for r in rows),
        "facets_max": max(r["facets"] for r in rows),
        "all_integral": all(r["integral"] for r in rows),
        "rows": rows,
    }


def cmd_fan(inv: Invocation) -> dict:
    rs = _rs(inv)
    sc = _cone(inv, rs, _word(rs, inv.word))
    fan = string_fan(sc)
    cones = fan_summary(fan)
    return {**_stamp(sc, inv), "word": list(sc.word), "maximal_cones": len(cones), "fan_trivial": len(cones) == 1,
            "cones": cones}


def cmd_fiber(inv: Invocation) -> dict:
    rs = _rs(inv)
    sc = _cone(inv, rs, _word(rs, inv.word))
    poly = string_polytope(sc, inv.lam)
    star = rs.dual_weight(inv.lam)
    mus = [inv.mu] if inv.mu is not None else sorted(rs.weight_multiplicities(star))
    fibers = []
    for mu in mus:
        fibers.append({
            "mu": _rats(mu),
            "lattice_points": len(lattice_points(fiber_polytope(poly, mu))),
            "multiplicity": rs.freudenthal_mult(star, mu),
            "volume": fmt_rat(fiber_volume(poly, mu)),
        })
    out = {**_stamp(sc, inv), "word": list(sc.word), "lambda": _rats(inv.lam), "fibers": fibers,
           "all_match": all(f["lattice_points"] == f["multiplicity"] for f in fibers)}
    if inv.mu is None:
        try:
            ext = extremal_weight_vertices(poly)
            out["extremal_vertices"] = [{"mu": list(mu), "vertex": _rats(p)} for mu, p in sorted(ext.items())]
        except StringToricError as exc:
            out["extremal_vertices_error"] = str(exc)
    return out


def cmd_anticanonical(inv: Invocation) -> dict:
    rs = _rs(inv)
    sc = _cone(inv, rs, _word(rs, inv.word))
    out = {**_stamp(sc, inv), **anticanonical_check(sc)}
    if all(x > 0 for x in (inv.lam or rs.rho)):
        hw = hw_tangent_cone_check(sc, inv.lam or rs.rho)
        out["hw_tangent_cone"] = {k: hw[k] for k in ("vertex", "equals_weight_cone", "simplicial", "unimodular")}
    return out


def cmd_e6(inv: Invocation) -> dict:
    res = e6_counterexample(inv.n)
    return {"provenance": "builtin-E6-suffix", **res}


def cmd_crystal_check(inv: Invocation) -> dict:
    rs = _rs(inv)
    if rs.cartan_type != "A":
        raise UsageError("crystal-check: the tableau crystal is only available in type A")
    sc = _cone(inv, rs, _word(rs, inv.word))
    res = crystal.crystal_lattice_check(rs, inv.lam, sc.word, sc)
    res["missing_from_polytope"] = [list(x) for x in res["missing_from_polytope"]]
    res["extra_in_polytope"] = [_rats(x) for x in res["extra_in_polytope"]]
    return {**_stamp(sc, inv), **res}


def _empty(dim: int, kind: str) -> dict:
    return {"record": {"infeasible": True}, "infeasible": True, "_porta": None, "_dim": dim, "_kind": kind}


def cmd_emit(inv: Invocation) -> dict:
    if inv.input:
        with open(inv.input, encoding="utf-8") as fh:
            text = fh.read()
        if "CONV_SECTION" in text or "CONE_SECTION" in text or inv.input.endswith(".poi"):
            obj = read_poi(text)
        elif "INEQUALITIES_SECTION" in text or "INFEASIBLE" in text:
            obj = read_ieq(text)
        else:
            raise UnsupportedFormat(f"{inv.input} is neither a .ieq nor a .poi file")
        dim = int(text.split("=", 1)[1].split()[0]) if "DIM" in text else 0
        out = {"input": inv.input}
        if obj is None:
            return {**out, **_empty(dim, inv.kind)}
        try:
            if isinstance(obj, HPolyhedron):
                obj = dd_convert(obj) if inv.kind == "poi" else facet_reduce(obj)
            elif isinstance(obj, VPolytope) and inv.kind == "ieq":
                obj = vform_to_hform(obj)
        except EmptyPolyhedron:
            return {**out, **_empty(dim, inv.kind)}
        return {**out, "record": _record(obj), "_porta": obj}
    rs = _rs(inv)
    sc = _cone(inv, rs, _word(rs, inv.word))
    out = {**_stamp(sc, inv), "word": list(sc.word)}
    if inv.lam is None:
        obj = sc.cone if inv.kind == "ieq" else dd_convert(sc.cone)
    else:
        poly = string_polytope(sc, inv.lam)
        obj = poly.facets if inv.kind == "ieq" else poly.vform
    return {**out, "record": _record(obj), "_porta": obj}


def _record(obj) -> dict:
    if isinstance(obj, HPolyhedron):
        return to_record(h=obj)
    return to_record(v=obj)


HANDLERS = {
    "info": cmd_info,
    "cone": cmd_cone,
    "polytope": cmd_polytope,
    "census": cmd_census,
    "fan": cmd_fan,
    "fiber": cmd_fiber,
    "anticanonical": cmd_anticanonical,
    "e6": cmd_e6,
    "crystal-check": cmd_crystal_check,
    "emit": cmd_emit,
}


def _echo(inv: Invocation) -> dict:
    out = {"command": inv.command, "system": inv.system}
    for key in ("word", "provider", "sample", "n"):
        val = getattr(inv, key)
        if key == "n" and inv.command != "e6":
            continue
        if val is not None:
            out[key] = val
    if inv.lam is not None:
        out["lambda"] = _rats(inv.lam)
    if inv.mu is not None:
        out["mu"] = _rats(inv.mu)
    if inv.trust_external:
        out["trust_external"] = True
    return out


def execute(inv: Invocation) -> dict:
    """Run the command; errors become a failure report with their exit code."""
    saved = os.environ.get("SPW_BUDGET")
    if inv.budget:
        os.environ["SPW_BUDGET"] = inv.budget
    start = time.perf_counter()
    report = {"schema": SCHEMA, "input": _echo(inv)}
    try:
        report["result"] = HANDLERS[inv.command](inv)
        report["exit_code"] = 3 if report["result"].get("infeasible") else 0
    except StringToricError as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        report["exit_code"] = exc.exit_code
    finally:
        if inv.budget:
            if saved is None:
                os.environ.pop("SPW_BUDGET", None)
            else:
                os.environ["SPW_BUDGET"] = saved
    if inv.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    return report


# ---------------------------------------------------------------------------
# output


def _public(obj):
    if isinstance(obj, dict):
        return {k: _public(v) for k, v in obj.items() if not k.startswith("_")}
    if isinstance(obj, (list, tuple)):
        return [_public(v) for v in obj]
    if isinstance(obj, Fraction):
        return fmt_rat(obj)
    return obj


def _flat(prefix: str, obj, out: dict):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flat(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(obj, list) and obj and all(not isinstance(x, (dict, list)) for x in obj):
        out[prefix] = " ".join(json.dumps(x) if isinstance(x, bool) else str(x) for x in obj)
    elif isinstance(obj, list):
        out[prefix] = json.dumps(obj, separators=(",", ":"))
    elif isinstance(obj, bool):
        out[prefix] = "true" if obj else "false"
    else:
        out[prefix] = obj


def _csv(report: dict) -> str:
    buf = io.StringIO()
    res = report.get("result", {})
    if report["input"]["command"] == "census" and "rows" in res:
        rows = []
        for r in res["rows"]:
            flat: dict = {}
            _flat("", {k: v for k, v in r.items() if k != "certification"}, flat)
            rows.append(flat)
    else:
        flat = {}
        _flat("", {"input": report["input"], **({"result": res} if res else {"error": report.get("error")})}, flat)
        rows = [flat]
    keys = list(dict.fromkeys(k for r in rows for k in r))
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _text(report: dict) -> str:
    flat: dict = {}
    _flat("", _public(report), flat)
    return "".join(f"{k}: {v}\n" for k, v in flat.items())


def _porta(report: dict, raw: dict) -> str:
    if "error" in report:
        raise UnsupportedFormat("no polyhedron to write")
    obj = raw.get("result", {}).get("_porta", "missing")
    if obj == "missing":
        raise UnsupportedFormat(f"porta output is not available for {report['input']['command']}")
    if obj is None:
        res = raw["result"]
        return write_poi(None, res["_dim"]) if res["_kind"] == "poi" else write_ieq(None, res["_dim"])
    if isinstance(obj, HPolyhedron):
        return write_ieq(obj)
    if isinstance(obj, VPolytope):
        return write_poi(obj)
    return write_ieq(obj)


def emit(report: dict, fmt: str) -> bytes:
    """Render a report as bytes in one of json, csv, porta, text."""
    public = _public(report)
    if fmt == "json":
        return (json.dumps(public, indent=2) + "\n").encode()
    if fmt == "csv":
        return _csv(public).encode()
    if fmt == "text":
        return _text(public).encode()
    if fmt == "porta":
        return _porta(public, report).encode()
    raise UnsupportedFormat(f"unknown format {fmt!r}")


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        inv = parse(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"usage error: --config: {exc}", file=sys.stderr)
        return 2
    report = execute(inv)
    try:
        data = emit(report, inv.fmt)
    except UnsupportedFormat as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.buffer.write(data)
    sys.stdout.flush()
    if "error" in report:
        print(f"error: {report['error']['type']}: {report['error']['message']}", file=sys.stderr)
    return report["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
