"""Command line entry point: ``rainbowcycles <subcommand> [options]``.

Exit status: 0 on success, 1 when a check fails or a pipeline ends without a
certificate, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import io as gio
from .bounds import bound_table, check_scalar_lemmas
from .errors import BudgetExceeded, PipelineFailure, RainbowError
from .generators import FAMILIES, GenSpec, generate
from .graph import ColoredGraph, Digraph
from .harness import CampaignConfig, run_campaign
from .reductions import C_MAIN, C_N_PLUS_K, PipelineParams, pipeline_main, pipeline_n_plus_k
from .search import (
    SearchLimits,
    brute_force_rainbow_girth,
    directed_girth,
    rainbow_girth_exact,
    undirected_girth,
)


class UsageError(Exception):
    pass


def _parse_scale(text: str) -> float:
    key, sep, value = text.partition("=")
    if key.strip() != "c" or not sep:
        raise argparse.ArgumentTypeError("expected --scale c=<value>")
    try:
        c = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad scale value {value!r}") from None
    if not c > 0:
        raise argparse.ArgumentTypeError("scale c must be positive")
    return c


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.add_argument("--in", dest="infile", default=argparse.SUPPRESS)
    p.add_argument("--out", dest="outfile", default=argparse.SUPPRESS)
    p.add_argument("--scale", type=_parse_scale, default=argparse.SUPPRESS, metavar="c=VALUE")
    return p


def build_parser() -> argparse.ArgumentParser:
    glob = _global_flags()
    parser = argparse.ArgumentParser(prog="rainbowcycles", parents=[glob], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[glob], help="generate an instance")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--steps", default=None, help="comma separated circulant steps")

    sub.add_parser("girth", parents=[glob], help="shortest cycle of a graph")
    sub.add_parser("directed-girth", parents=[glob], help="shortest directed cycle")

    p = sub.add_parser("rainbow-girth", parents=[glob], help="shortest rainbow cycle")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--node-budget", type=int, default=10**8)
    p.add_argument("--brute", action="store_true", help="use the brute-force oracle (n <= 12)")

    p = sub.add_parser("pipeline", parents=[glob], help="run a certifying pipeline")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=("main", "n+k", "auto"), default="auto")
    p.add_argument("--strict", action="store_true", help="enforce the class-size hypotheses")
    p.add_argument("--class-size", type=int, default=None)

    p = sub.add_parser("bounds", parents=[glob], help="bound table for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("lemmas", parents=[glob], help="sweep the scalar lemmas")
    p.add_argument("--k-lo", type=int, default=2)
    p.add_argument("--k-hi", type=int, default=2**20)

    p = sub.add_parser("verify", parents=[glob], help="run a campaign from a JSON config")
    p.add_argument("--config", required=True)
    return parser


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _table(rows: Sequence[tuple]) -> List[str]:
    width = max(len(str(r[0])) for r in rows)
    return [f"{str(k).ljust(width)}  {v}" for k, v in rows]


def _load(args, want=None):
    if not args.infile:
        raise UsageError("--in is required")
    g = gio.load(args.infile)
    if want is not None and not isinstance(g, want):
        raise UsageError(f"{args.infile}: expected a {'colored graph' if want is ColoredGraph else 'digraph'}")
    return g


def _cmd_gen(args) -> int:
    steps = tuple(int(s) for s in args.steps.split(",")) if args.steps else None
    spec = GenSpec(args.family, args.n, args.k, args.K, args.seed, steps)
    g = generate(spec)
    text = gio.dumps(g)
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
        with open(args.outfile + ".json", "w", encoding="utf-8") as fh:
            fh.write(spec.to_json() + "\n")
        _emit(args, {"spec": spec.to_dict(), "out": args.outfile}, [f"wrote {args.outfile}"])
    else:
        sys.stdout.write(text)
    return 0


def _cycle_payload(cert) -> dict:
    return {"length": cert.length if cert else None, "certificate": cert.to_dict() if cert else None}


def _cmd_girth(args) -> int:
    g = _load(args, ColoredGraph)
    cert = undirected_girth(g)
    _emit(args, _cycle_payload(cert), [str(cert.length) if cert else "none"])
    return 0


def _cmd_directed_girth(args) -> int:
    d = _load(args, Digraph)
    cert = directed_girth(d)
    _emit(args, _cycle_payload(cert), [str(cert.length) if cert else "none"])
    return 0


def _cmd_rainbow_girth(args) -> int:
    g = _load(args, ColoredGraph)
    if args.brute:
        length = brute_force_rainbow_girth(g, args.max_len)
        _emit(args, {"length": length, "oracle": "brute"}, [str(length) if length else "none"])
        return 0
    limits = SearchLimits(max_len=args.max_len or max(g.n, 2), node_budget=args.node_budget)
    try:
        cert = rainbow_girth_exact(g, limits)
    except BudgetExceeded as exc:
        _emit(args, {"length": None, "status": "budget_exceeded", "lower_bound": exc.lower_bound},
              [f"budget exceeded; no rainbow cycle shorter than {exc.lower_bound}"])
        return 1
    _emit(args, {**_cycle_payload(cert), "status": "exact"}, [str(cert.length) if cert else "none"])
    return 0


def _cmd_pipeline(args) -> int:
    g = _load(args, ColoredGraph)
    kind = args.kind
    if kind == "auto":
        kind = "n+k" if g.K > g.n else "main"
    default_c = C_MAIN if kind == "main" else C_N_PLUS_K
    params = PipelineParams(c=args.scale if args.scale else default_c, class_size=args.class_size)
    run = pipeline_main if kind == "main" else pipeline_n_plus_k
    try:
        rep = run(g, args.k, params, args.seed, strict=args.strict)
    except PipelineFailure as exc:
        rep = exc.report
    cert = rep.certificate
    lines = _table([
        ("kind", rep.kind), ("branch", rep.branch), ("status", rep.status), ("seed", rep.seed),
        ("length", cert.length if cert else "-"), ("bound", rep.bound if rep.bound is not None else "-"),
        ("cycle", " ".join(map(str, cert.vertices)) if cert else rep.reason),
    ])
    _emit(args, json.loads(rep.to_json()), lines)
    return 0 if rep.status == "ok" else 1


def _cmd_bounds(args) -> int:
    bt = bound_table(args.n, args.k)
    rows = [(k, "n/a" if v is None else (f"{v:.6g}" if isinstance(v, float) else v)) for k, v in bt.to_dict().items()]
    _emit(args, bt.to_dict(), _table(rows))
    return 0


def _cmd_lemmas(args) -> int:
    rep = check_scalar_lemmas(args.k_lo, args.k_hi)
    rows = [(l.statement, "pass" if l.passed else f"FAIL at k={l.first_failure}") for l in rep.lemmas]
    _emit(args, rep.to_dict(), _table(rows))
    return 0 if rep.passed else 1


def _cmd_verify(args) -> int:
    cfg = CampaignConfig.load(args.config)
    summary = run_campaign(cfg, output=args.outfile or None)
    d = summary.to_dict()
    _emit(args, d, _table([(k, v) for k, v in d.items()]))
    return 0 if summary.ok else 1


COMMANDS = {
    "gen": _cmd_gen,
    "girth": _cmd_girth,
    "directed-girth": _cmd_directed_girth,
    "rainbow-girth": _cmd_rainbow_girth,
    "pipeline": _cmd_pipeline,
    "bounds": _cmd_bounds,
    "lemmas": _cmd_lemmas,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name, default in (("seed", 0), ("json", False), ("infile", None), ("outfile", None), ("scale", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, RainbowError, OSError) as exc:
        print(f"rainbowcycles {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
