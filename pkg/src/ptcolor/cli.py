"""Command line front end: ``color``, ``verify``, ``generate`` and ``bench``.

Exit codes are a machine contract. Standard output carries only JSON or CSV
payloads; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from . import generators as gen
from .driver import (
    Colored,
    FoundPt,
    bound,
    refutation_from_json,
    result_to_json,
    timed_approx_color,
)
from .graph import Coloring, Graph, GraphFormatError, read_graph, verify_coloring, verify_path, verify_triangle
from .oracles import DEFAULT_CAP, OracleCapExceeded, read_nae, verify_refutation
from .outcomes import DEFAULT_CERT_CAP

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FOUND_PATH = 2
EXIT_NOT_3COL = 3
EXIT_REJECTED = 4


def _err(msg: str) -> None:
    print(f"ptcolor: {msg}", file=sys.stderr)


def _root_arg(text: str):
    if text in ("lowest-id", "max-degree"):
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("root must be lowest-id, max-degree or a vertex id") from None


def _t_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad t range {text!r}") from None
    if not values or min(values) < 3:
        raise argparse.ArgumentTypeError("t values must be at least 3")
    return values


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- color --------------------------------------------------------------------


def cmd_color(args) -> int:
    try:
        G = read_graph(args.input)
    except (OSError, GraphFormatError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    if isinstance(args.root, int) and not 0 <= args.root < G.n:
        _err(f"root {args.root} is not a vertex")
        return EXIT_INPUT
    result, ms = timed_approx_color(G, args.t, args.root)
    report = result_to_json(result, G, args.t, round(ms, 3), args.cert_cap)
    _emit(json.dumps(report) + "\n", args.out)
    if isinstance(result, Colored):
        return EXIT_OK
    if isinstance(result, FoundPt):
        return EXIT_FOUND_PATH
    return EXIT_NOT_3COL


# -- verify -------------------------------------------------------------------


def check_report(G: Graph, report: dict[str, Any], cap: int = DEFAULT_CERT_CAP) -> bool:
    """Replay every claim in a color report; raises ``ValueError`` on schema errors."""
    if report.get("schema") != 1:
        raise ValueError("unsupported or missing schema version")
    t = report.get("t")
    if not isinstance(t, int):
        raise ValueError("missing integer field 't'")
    status = report.get("status")
    if status == "colored":
        colors = report.get("coloring")
        used = report.get("colors_used")
        if not isinstance(colors, list) or not isinstance(used, int):
            raise ValueError("colored report needs 'coloring' list and 'colors_used'")
        if len(colors) != G.n or not all(isinstance(c, int) for c in colors):
            return False
        if len(set(colors)) != used:
            return False
        if not verify_coloring(G, Coloring(dict(enumerate(colors)), used)):
            return False
        tri = report.get("triangle")
        return tri is None or verify_triangle(G, tri)
    if status == "found-path":
        path = report.get("path")
        if not isinstance(path, list):
            raise ValueError("found-path report needs a 'path' list")
        return verify_path(G, path, t)
    if status == "not-3-colorable":
        cert = report.get("certificate")
        if not isinstance(cert, dict):
            raise ValueError("not-3-colorable report needs a 'certificate' object")
        return verify_refutation(G, refutation_from_json(cert), cap)
    raise ValueError(f"unknown status {status!r}")


def cmd_verify(args) -> int:
    try:
        G = read_graph(args.graph)
        report = json.loads(Path(args.result).read_text())
        ok = check_report(G, report, args.cap_oracle)
    except (OSError, GraphFormatError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, OracleCapExceeded):
            _err(f"certificate too large to check: {exc}")
            return EXIT_REJECTED
        _err(str(exc))
        return EXIT_INPUT
    if not ok:
        _err("claimed object does not verify")
        return EXIT_REJECTED
    return EXIT_OK


# -- generate -----------------------------------------------------------------


def _sizes(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _generate(args) -> list[tuple[str, Graph, dict[str, Any]]]:
    fam = args.family
    seeds = np.random.SeedSequence(args.seed).spawn(args.count)
    out = []
    if fam == "nae-reduction":
        if not args.formula:
            raise ValueError("nae-reduction needs --formula")
        red = gen.nae_reduction(read_nae(args.formula))
        meta = {"generator": fam, "params": {"formula": str(args.formula)}, "seed": None,
                "apex": red.v, "apex_no_induced_path": 5, "three_colorable": None, "pt_free": None}
        out.append(("nae-reduction", red.graph, meta))
    elif fam == "nae-random":
        for i, ss in enumerate(seeds):
            f = gen.random_nae_formula(args.vars, args.clauses, ss)
            red = gen.nae_reduction(f)
            meta = {"generator": fam, "params": {"vars": args.vars, "clauses": args.clauses,
                    "formula": [list(c) for c in f.clauses]}, "seed": args.seed, "index": i,
                    "apex": red.v, "apex_no_induced_path": 5, "three_colorable": None, "pt_free": None}
            out.append((f"nae-random-{i:04d}", red.graph, meta))
    elif fam == "clique-join":
        if not args.input or args.k is None:
            raise ValueError("clique-join needs --input and --k")
        G = gen.clique_join(read_graph(args.input), args.k)
        out.append(("clique-join", G, {"generator": fam, "params": {"input": str(args.input), "k": args.k},
                                       "seed": None, "three_colorable": None, "pt_free": None}))
    elif fam in ("tripartite", "multipartite"):
        sizes = _sizes(args.sizes or "")
        if fam == "tripartite" and len(sizes) != 3:
            raise ValueError("tripartite needs --sizes a,b,c")
        G = gen.multipartite(sizes)
        three = len(sizes) <= 3
        out.append((f"{fam}-{'-'.join(map(str, sizes))}", G,
                    {"generator": fam, "params": {"sizes": sizes}, "seed": None,
                     "three_colorable": three, "pt_free": 4 if three else None}))
    elif fam == "random-3col":
        for i, ss in enumerate(seeds):
            G = gen.random_3colorable(args.n, args.p, ss)
            out.append((f"random-3col-{i:04d}", G, {"generator": fam, "params": {"n": args.n, "p": args.p},
                        "seed": args.seed, "index": i, "three_colorable": True, "pt_free": None}))
    elif fam == "random-3col-ptfree":
        if args.t is None:
            raise ValueError("random-3col-ptfree needs --t")
        for i, ss in enumerate(seeds):
            G = gen.random_3colorable_ptfree(args.n, args.t, args.p, ss, args.max_tries, args.cap_oracle)
            if G is None:
                _err(f"instance {i}: no P_{args.t}-free sample within {args.max_tries} tries")
                continue
            out.append((f"random-3col-ptfree-{i:04d}", G,
                        {"generator": fam, "params": {"n": args.n, "t": args.t, "p": args.p},
                         "seed": args.seed, "index": i, "three_colorable": True, "pt_free": args.t}))
    else:
        raise ValueError(f"unknown family {fam!r}")
    return out


def cmd_generate(args) -> int:
    try:
        instances = _generate(args)
    except (OSError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    manifest = gen.write_corpus(args.outdir, instances)
    _emit(manifest.read_text(), None)
    return EXIT_OK


# -- bench --------------------------------------------------------------------

BENCH_FIELDS = ["instance", "t", "status", "colors_used", "bound", "triangle", "runtime_ms", "within_bound"]


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    try:
        manifest = json.loads((corpus / "manifest.json").read_text())
        entries = sorted(manifest["instances"], key=lambda e: e["name"])
    except (OSError, ValueError, KeyError) as exc:
        _err(f"cannot read manifest: {exc}")
        return EXIT_INPUT

    rows = []
    violations = 0
    for entry in entries:
        try:
            G = read_graph(corpus / entry["file"])
        except (OSError, GraphFormatError) as exc:
            _err(f"{entry.get('name')}: {exc}")
            return EXIT_INPUT
        promised_free = entry.get("pt_free")
        for t in args.t:
            result, ms = timed_approx_color(G, t, args.root)
            row = {"instance": entry["name"], "t": t, "runtime_ms": f"{ms:.3f}"}
            if isinstance(result, Colored):
                b = bound(t, result.triangle is not None)
                ok = result.colors_used <= b
                row.update(status="colored", colors_used=result.colors_used, bound=b,
                           triangle=int(result.triangle is not None), within_bound=int(ok))
            else:
                ok = True
                row.update(status="found-path" if isinstance(result, FoundPt) else "not-3-colorable",
                           colors_used="", bound="", triangle="", within_bound="")
            promised = entry.get("three_colorable") and promised_free is not None and t >= promised_free
            if promised and not (isinstance(result, Colored) and ok):
                violations += 1
                _err(f"{entry['name']} t={t}: promise-class instance not colored within bound")
            rows.append(row)

    for t in args.t:
        colored = [r for r in rows if r["t"] == t and r["status"] == "colored"]
        if colored:
            rows.append({"instance": "summary", "t": t, "status": "max",
                         "colors_used": max(r["colors_used"] for r in colored),
                         "bound": max(r["bound"] for r in colored), "triangle": "",
                         "runtime_ms": "", "within_bound": int(all(r["within_bound"] for r in colored))})

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(buf.getvalue(), args.out)
    return EXIT_REJECTED if violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph file and print a JSON report")
    p.add_argument("input")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--root", type=_root_arg, default="lowest-id")
    p.add_argument("--cert-cap", type=int, default=DEFAULT_CERT_CAP)
    p.add_argument("--out")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="replay the claims of a color report")
    p.add_argument("graph")
    p.add_argument("result")
    p.add_argument("--cap-oracle", type=int, default=DEFAULT_CERT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a corpus of instances plus manifest.json")
    p.add_argument("family", choices=["nae-reduction", "nae-random", "clique-join", "tripartite",
                                      "multipartite", "random-3col", "random-3col-ptfree"])
    p.add_argument("--outdir", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--formula")
    p.add_argument("--input")
    p.add_argument("--k", type=int)
    p.add_argument("--sizes")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--t", type=int)
    p.add_argument("--vars", type=int, default=4)
    p.add_argument("--clauses", type=int, default=3)
    p.add_argument("--max-tries", type=int, default=200)
    p.add_argument("--cap-oracle", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="color every corpus instance for a range of t, CSV out")
    p.add_argument("corpus")
    p.add_argument("--t", type=_t_range, required=True)
    p.add_argument("--root", type=_root_arg, default="lowest-id")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "t", None) is not None and args.command == "color" and args.t < 3:
        _err("t must be at least 3")
        return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
