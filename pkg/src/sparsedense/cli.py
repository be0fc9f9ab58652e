"""Command-line front end.

Every subcommand writes one report to stdout (JSON with ``--json``, text
otherwise) and a one-line summary to stderr. Off-class graphs and infeasible
instances are ordinary results with exit status 0; only input and usage errors
exit nonzero.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from collections.abc import Callable, Sequence

from sparsedense import applications, oracle
from sparsedense.graph import Graph, GraphFormatError, canonical, generate_kl_graph, parse_dimacs, parse_edge_list, to_edge_list
from sparsedense.independent import UnsupportedClassError, enumerate_maximal_is, solve_max_is
from sparsedense.partition import NotInClassError, enumerate_partitions
from sparsedense.recognizers import ClassSpec, SpecError, parse_spec

SCHEMA_VERSION = 1
THREADS_ENV = "SPARSEDENSE_THREADS"


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args) -> tuple[Graph, str]:
    text = _read(args.input)
    parse = parse_dimacs if args.format == "dimacs" else parse_edge_list
    return parse(text), text


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _spec(args) -> ClassSpec:
    if args.spec is None:
        raise UsageError("--spec is required")
    return parse_spec(args.spec)


def _not_in_class(spec: ClassSpec) -> dict:
    return {"status": "NOT_IN_CLASS", "class_pair": str(spec)}


# -- subcommands: each returns (input text, result payload, warnings, summary) --


def cmd_partition(args):
    g, text = _load_graph(args)
    spec = _spec(args)
    result = enumerate_partitions(g, spec)
    warnings = [f"step {w.step}: {w.count} partitions exceeds bound {w.bound}" for w in result.bound_warnings]
    chosen = result.partitions if args.all else result.partitions[:1]
    if not chosen:
        payload = {"status": "none", "summary": result.summary()}
        return text, payload, warnings, "no sparse-dense partition"
    payload = {"status": "ok", "partitions": [p.to_dict() for p in chosen], "summary": result.summary()}
    return text, payload, warnings, f"{len(result.partitions)} partition(s), emitted {len(chosen)}"


def cmd_enum_mis(args):
    g, text = _load_graph(args)
    spec = _spec(args)
    try:
        mis = enumerate_maximal_is(g, spec)
    except NotInClassError:
        return text, _not_in_class(spec), [], "NOT_IN_CLASS"
    return text, {"status": "ok", **mis.to_dict()}, [], f"{len(mis)} maximal independent set(s)"


def cmd_max_is(args):
    g, text = _load_graph(args)
    spec = _spec(args)
    try:
        res = solve_max_is(g, spec)
    except NotInClassError:
        return text, _not_in_class(spec), [], "NOT_IN_CLASS"
    return text, {"status": "ok", **res.to_dict()}, [], f"maximum independent set of size {res.size}"


def cmd_well_covered(args):
    g, text = _load_graph(args)
    spec = _spec(args)
    verdict = applications.is_well_covered(g, spec)
    return text, verdict.to_dict(), [], verdict.status.value


def cmd_conflict(args):
    text = _read(args.input)
    instance = applications.parse_conflict_instance(text)
    spec = _spec(args)
    try:
        if args.problem == "mst":
            sol = applications.conflict_free_mst(instance, spec)
        else:
            if args.source is None or args.target is None:
                raise UsageError("--problem path needs --source and --target")
            sol = applications.conflict_free_shortest_path(instance, args.source, args.target, spec)
    except NotInClassError:
        return text, _not_in_class(spec), [], "NOT_IN_CLASS"
    if sol is None:
        return text, {"status": "infeasible", "problem": args.problem}, [], "infeasible"
    payload = {"status": "ok", "problem": args.problem, **sol.to_dict(instance)}
    return text, payload, [], f"objective {payload['objective']}"


def cmd_gen(args):
    sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    g, parts = generate_kl_graph(args.k, args.l, sizes, args.p, seed=args.seed)
    out = to_edge_list(g)
    if args.output in (None, "-"):
        if not args.json:
            sys.stdout.write(out)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    payload = {
        "status": "ok",
        "n": g.n,
        "m": g.m,
        "parts": [list(canonical(p)) for p in parts],
        "output": args.output,
    }
    if args.output in (None, "-") and args.json:
        payload["graph"] = out
    return out, payload, [], f"generated graph with {g.n} vertices and {g.m} edges"


def cmd_oracle(args):
    g, text = _load_graph(args)
    what = args.what
    if what == "mis":
        sets = oracle.bron_kerbosch_mis(g)
        return text, {"count": len(sets), "sets": [list(canonical(s)) for s in sets]}, [], f"{len(sets)} sets"
    if what == "alpha":
        best = oracle.brute_force_max_is(g)
        return text, {"alpha": len(best), "set": list(canonical(best))}, [], f"alpha = {len(best)}"
    if what == "partitions":
        parts = oracle.brute_force_partitions(g, _spec(args))
        return text, {"count": len(parts), "partitions": [p.to_dict() for p in parts]}, [], f"{len(parts)} partitions"
    verdict = oracle.brute_force_well_covered(g)
    return text, verdict.to_dict(), [], verdict.status.value


# -- plumbing -----------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="input path, '-' for stdin")
    p.add_argument("--input", dest="input_flag", help="input path (alternative to the positional)")
    p.add_argument("--format", choices=["edge-list", "dimacs"], default="edge-list")


def _add_common(p: argparse.ArgumentParser, spec: bool = True) -> None:
    if spec:
        p.add_argument("--spec", help="class pair, '1,L' or '2,L'")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--threads", type=int, default=None, help=f"worker threads (default ${THREADS_ENV} or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sparsedense", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="enumerate sparse-dense partitions")
    _add_input(p)
    _add_common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", default=True)
    group.add_argument("--first", dest="all", action="store_false")
    p.set_defaults(func=cmd_partition)

    for name, func, help_ in [
        ("enum-mis", cmd_enum_mis, "enumerate all maximal independent sets"),
        ("max-is", cmd_max_is, "find a maximum independent set"),
        ("well-covered", cmd_well_covered, "decide well-coveredness"),
    ]:
        p = sub.add_parser(name, help=help_)
        _add_input(p)
        _add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("conflict", help="conflict-free spanning tree or shortest path")
    _add_input(p)
    _add_common(p)
    p.add_argument("--problem", choices=["mst", "path"], default="mst")
    p.add_argument("--source", type=int)
    p.add_argument("--target", type=int)
    p.set_defaults(func=cmd_conflict)

    p = sub.add_parser("gen", help="generate a random (k,l)-graph in edge-list format")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("sizes", help="comma-separated part sizes, independent parts first")
    p.add_argument("-p", "--prob", dest="p", type=float, default=0.0, help="cross-part edge probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="output path (default stdout)")
    _add_common(p, spec=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exponential-time reference computations")
    p.add_argument("what", choices=["mis", "alpha", "partitions", "well-covered"])
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def _threads(args) -> int:
    if getattr(args, "threads", None) is not None:
        return args.threads
    try:
        return int(os.environ.get(THREADS_ENV, "1"))
    except ValueError:
        return 1


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if report.get("spec"):
        lines.append(f"spec: {report['spec']}")
    for key, value in report["result"].items():
        lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    lines += [f"warning: {w}" for w in report["warnings"]]
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "input_flag"):
        args.input = args.input_flag or args.input
        if args.input is None:
            parser.error("an input path is required")
    func: Callable = args.func
    start = time.perf_counter()
    try:
        text, payload, warnings, summary = func(args)
    except (GraphFormatError, SpecError, UsageError, UnsupportedClassError, ValueError) as exc:
        print(f"sparsedense {args.command}: error: {exc}", file=sys.stderr)
        return 2
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "input_digest": _digest(text),
        "spec": getattr(args, "spec", None),
        "threads": _threads(args),
        "result": payload,
        "timing_seconds": round(time.perf_counter() - start, 6),
        "warnings": warnings,
    }
    if args.json:
        sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    elif args.command != "gen" or args.output not in (None, "-"):
        sys.stdout.write(_render_text(report))
    print(f"sparsedense {args.command}: {summary}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
