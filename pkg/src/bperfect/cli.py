"""Command-line front end.

Exit codes: 0 ok/yes, 1 no (or verification mismatch), 2 input error,
3 guard violation (input is not b-perfect).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .bgreedy import b_greedy, default_order
from .boats import extend_to_special_boat, find_small_boat
from .clique import clique, clique_via_module_tree
from .errors import GraphError, MalformedInput, NotABoat, NotBPerfect
from .forbidden import family, find_forbidden, small_boats
from .generate import ENUMERATE_MAX_N, enumerate_graphs
from .graph import bits, encode_graph6, parse_graph
from .modules import modular_decomposition
from .oracles import (b_chromatic_number, chromatic_number, clique_number, is_b_coloring,
                      is_b_perfect_oracle, is_minimally_b_imperfect, is_proper, max_clique)

SCHEMA = 1
EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

log = logging.getLogger("bperfect")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args):
    text = _read(args.input)
    if args.format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise MalformedInput(0, "no graph6 line found")
        text = lines[0]
    return parse_graph(text, args.format)


def _emit(args, report: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _witness(hit):
    if hit is None:
        return None
    index, emb = hit
    return {"pattern": f"F{index}", "index": index, "embedding": list(emb)}


def cmd_recognize(args) -> int:
    g = _load(args)
    t0 = time.perf_counter()
    hit = find_forbidden(g)
    elapsed = time.perf_counter() - t0
    report = {"schema": SCHEMA, "command": "recognize", "n": g.n, "m": g.m,
              "b_perfect": hit is None, "witness": _witness(hit),
              "timings": {"recognize_s": elapsed}}
    if hit is None:
        lines = ["b-perfect: yes"]
    else:
        lines = [f"b-perfect: no (induced F{hit[0]} at {list(hit[1])})"]
    _emit(args, report, lines)
    return EXIT_OK if hit is None else EXIT_NO


def _parse_order(text: str | None):
    if text is None:
        return None
    return [int(x) for x in text.replace(",", " ").split()]


def cmd_color(args) -> int:
    g = _load(args)
    hit = find_forbidden(g)
    if hit is not None:
        if args.require_b_perfect:
            _emit(args, {"schema": SCHEMA, "command": "color", "error": "not b-perfect",
                         "witness": _witness(hit)},
                  [f"refused: induced F{hit[0]} at {list(hit[1])}"])
            return EXIT_GUARD
        log.warning("input is not b-perfect (induced F%d); the coloring may not be optimal", hit[0])
    order = _parse_order(args.order) or default_order(g)
    coloring, trace = b_greedy(g, order)
    assert is_proper(g, coloring) and is_b_coloring(g, coloring)
    report = {"schema": SCHEMA, "command": "color", "n": g.n, "m": g.m,
              "b_perfect": hit is None, "order": order, "colors": coloring.k,
              "coloring": list(coloring.colors), "trace": trace.to_dict()}
    lines = [f"colors: {coloring.k}", "coloring: " + " ".join(map(str, coloring.colors))]
    if hit is not None:
        lines.append(f"warning: not b-perfect (F{hit[0]})")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_clique(args) -> int:
    g = _load(args)
    guard = not args.unsafe_skip_check
    try:
        if args.method == "structural":
            res = clique(g, check=guard)
            members, trace = sorted(res.clique), res.trace
        elif args.method == "module-tree":
            res = clique_via_module_tree(g, check=guard)
            members, trace = sorted(res.clique), res.trace
        else:
            members, trace = list(bits(max_clique(g))), []
    except NotBPerfect as exc:
        hit = (exc.index, exc.embedding)
        _emit(args, {"schema": SCHEMA, "command": "clique", "error": "not b-perfect",
                     "witness": _witness(hit)},
              [f"refused: induced F{exc.index} at {list(exc.embedding)}"])
        return EXIT_GUARD
    assert g.is_clique(sum(1 << v for v in members))
    report = {"schema": SCHEMA, "command": "clique", "method": args.method, "n": g.n,
              "m": g.m, "clique": members, "size": len(members), "trace": trace}
    _emit(args, report, [f"size: {len(members)}", "clique: " + " ".join(map(str, members))])
    return EXIT_OK


def _verify_one(item):
    lineno, line, checks = item
    rec = {"id": lineno, "graph6": line}
    try:
        g = parse_graph(line, "graph6")
    except MalformedInput as exc:
        rec["error"] = str(exc)
        return rec
    rec.update(n=g.n, m=g.m)
    mismatches = []
    t0 = time.perf_counter()
    fast = find_forbidden(g) is None
    rec["b_perfect_fast"] = fast
    if "recognize" in checks:
        oracle = is_b_perfect_oracle(g)
        rec["b_perfect_oracle"] = oracle
        if oracle != fast:
            mismatches.append("recognition")
    if fast and g.n:
        if "color" in checks:
            coloring, _ = b_greedy(g)
            chi = chromatic_number(g)
            rec.update(chi=chi, greedy_colors=coloring.k)
            if coloring.k != chi or not is_b_coloring(g, coloring):
                mismatches.append("coloring")
        if "clique" in checks:
            omega = clique_number(g)
            size = clique(g, check=False).size
            rec.update(omega=omega, clique_size=size)
            if size != omega:
                mismatches.append("clique")
    rec["mismatches"] = mismatches
    rec["elapsed_s"] = time.perf_counter() - t0
    return rec


def cmd_verify(args) -> int:
    checks = set(args.checks.split(","))
    unknown = checks - {"recognize", "color", "clique"}
    if unknown:
        print(f"unknown checks: {sorted(unknown)}", file=sys.stderr)
        return EXIT_INPUT
    items = []
    skipped = 0
    for lineno, raw in enumerate(_read(args.input).splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(">>graph6<<") and len(line) == 10:
            continue
        try:
            n = parse_graph(line, "graph6").n
        except MalformedInput:
            n = 0
        if n > args.max_n:
            skipped += 1
            continue
        items.append((lineno, line, checks))
    t0 = time.perf_counter()
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(_verify_one, items, chunksize=16))
    else:
        records = [_verify_one(it) for it in items]
    elapsed = time.perf_counter() - t0
    errors = [r for r in records if "error" in r]
    for r in errors:
        log.error("line %d: %s", r["id"], r["error"])
    mismatched = [r for r in records if r.get("mismatches")]
    summary = {"graphs": len(records) - len(errors), "parse_errors": len(errors),
               "skipped_over_max_n": skipped,
               "b_perfect": sum(1 for r in records if r.get("b_perfect_fast")),
               "mismatches": [{"id": r["id"], "graph6": r["graph6"], "kinds": r["mismatches"]}
                              for r in mismatched],
               "elapsed_s": elapsed}
    report = {"schema": SCHEMA, "command": "verify", "checks": sorted(checks),
              "records": records if args.records else None, "summary": summary}
    lines = [f"graphs: {summary['graphs']}", f"b-perfect: {summary['b_perfect']}",
             f"parse errors: {len(errors)}", f"mismatches: {len(mismatched)}"]
    lines += [f"  line {m['id']} {m['graph6']}: {','.join(m['kinds'])}" for m in summary["mismatches"]]
    _emit(args, report, lines)
    if mismatched:
        return EXIT_NO
    return EXIT_INPUT if errors else EXIT_OK


def cmd_family(args) -> int:
    pats = family()
    for p in pats:
        print(encode_graph6(p.graph))
    if args.boats:
        for g in small_boats():
            print(encode_graph6(g))
    if args.selfcheck:
        failed = [p.name for p in pats if not is_minimally_b_imperfect(p.graph)]
        if failed:
            print("selfcheck failed: " + ", ".join(failed), file=sys.stderr)
            return EXIT_NO
        print("selfcheck: all 22 patterns are minimally b-imperfect", file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.max_n > ENUMERATE_MAX_N:
        print(f"max-n must be <= {ENUMERATE_MAX_N}", file=sys.stderr)
        return EXIT_INPUT
    for g in enumerate_graphs(args.max_n, args.min_n):
        print(encode_graph6(g))
    return EXIT_OK


def cmd_numbers(args) -> int:
    g = _load(args)
    coloring_b = b_chromatic_number(g)
    report = {"schema": SCHEMA, "command": "numbers", "n": g.n, "m": g.m,
              "chi": chromatic_number(g), "omega": clique_number(g), "b": coloring_b}
    _emit(args, report, [f"chi: {report['chi']}", f"omega: {report['omega']}", f"b: {coloring_b}"])
    return EXIT_OK


def cmd_modules(args) -> int:
    g = _load(args)
    tree = modular_decomposition(g)
    report = {"schema": SCHEMA, "command": "modules", "tree": tree.to_dict() if tree else None}
    print(json.dumps(report, indent=2))
    return EXIT_OK


def cmd_boat(args) -> int:
    g = _load(args)
    seed = find_small_boat(g)
    if seed is None:
        print(json.dumps({"schema": SCHEMA, "command": "boat", "boat": None}))
        return EXIT_NO
    try:
        part = extend_to_special_boat(g, seed)
    except NotABoat as exc:
        print(json.dumps({"schema": SCHEMA, "command": "boat", "error": str(exc)}))
        return EXIT_NO
    print(json.dumps({"schema": SCHEMA, "command": "boat", "boat": part.to_dict()}, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bperfect", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def single(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", default="-", help="file to read, '-' for stdin")
        p.add_argument("--format", choices=("graph6", "dimacs", "edgelist"), default="graph6")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    single("recognize", cmd_recognize, "test for an induced F1..F22")
    p = single("color", cmd_color, "b-greedy coloring")
    p.add_argument("--order", help="initial greedy order, e.g. '2,0,1'")
    p.add_argument("--require-b-perfect", action="store_true")
    p = single("clique", cmd_clique, "maximum clique")
    p.add_argument("--method", choices=("structural", "module-tree", "oracle"), default="structural")
    p.add_argument("--unsafe-skip-check", action="store_true")
    single("numbers", cmd_numbers, "exact chi, omega and b by brute force")
    single("modules", cmd_modules, "dump the modular decomposition tree as JSON")
    single("boat", cmd_boat, "dump the spanning special-boat partition as JSON")

    p = sub.add_parser("verify", help="check a graph6 stream against the exact oracles")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--checks", default="recognize,color,clique")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--records", action="store_true", help="include per-graph records in JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="print F1..F22 as graph6")
    p.add_argument("--boats", action="store_true", help="also print the two small boats")
    p.add_argument("--selfcheck", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="all non-isomorphic graphs as graph6")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MalformedInput, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
