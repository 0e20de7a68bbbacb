"""Command-line front end.

Exit codes: 0 success, 1 a check found a violation, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .bestswap import all_best_swap_edges
from .critical import compute_pairs, construct_critical_set, min_critical_set, proof_trace
from .errors import SwapCritError
from .graphcore import edge_label, split_cut
from .instances import GenSpec, export_dot, generate, read_instance, write_instance
from .stretch import stretch_factor
from .verify import (
    Instance,
    exhaustive_corpus,
    parse_checks,
    parse_kv,
    random_corpus,
    run_campaign,
    summarize,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _load(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return read_instance(data)


def _write_dot(args, g, t, highlight=None):
    if getattr(args, "dot", None):
        Path(args.dot).write_text(export_dot(g, t, highlight))


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)
    if getattr(args, "report", None):
        Path(args.report).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_gen(args) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    spec = GenSpec(
        model=args.model, n=args.n, chords=args.chords, density=args.density, seed=args.seed, tree=args.tree
    )
    g, t = generate(spec)
    Path(args.out).write_bytes(write_instance(g, t))
    _write_dot(args, g, t)
    print(args.out)
    return 0


def cmd_stretch(args) -> int:
    g, t = _load(args.instance)
    s = stretch_factor(g, t)
    _write_dot(args, g, t)
    _emit(args, {"stretch": f"{s.numerator}/{s.denominator}"}, f"{s.numerator}/{s.denominator}")
    return 0


def _row_payload(g, row):
    return {
        "edge": edge_label(g.edges[row.e]),
        "value": f"{row.best_value.numerator}/{row.best_value.denominator}",
        "argmin": [edge_label(f.endpoints) for f in row.argmin],
    }


def cmd_best_swaps(args) -> int:
    g, t = _load(args.instance)
    engines = ("oracle", "pairs") if args.engine == "both" else (args.engine,)
    tables = {eng: all_best_swap_edges(g, t, eng) for eng in engines}
    rows = []
    lines = []
    disagree = False
    for k, e in enumerate(sorted(t.tree_edge_ids)):
        first = tables[engines[0]][k]
        payload = _row_payload(g, first)
        line = f"{payload['edge']:>8}  {payload['value']:>6}  {' '.join(payload['argmin'])}"
        if len(engines) == 2:
            same = tables["oracle"][k].same_result(tables["pairs"][k])
            disagree |= not same
            payload["verdict"] = "AGREE" if same else "DISAGREE"
            if not same:
                payload["pairs"] = _row_payload(g, tables["pairs"][k])
            line += f"  {payload['verdict']}"
        rows.append(payload)
        lines.append(line)
    _write_dot(args, g, t)
    _emit(args, {"engine": args.engine, "rows": rows}, "\n".join(lines))
    return 1 if disagree else 0


def _parse_edge(text: str):
    try:
        u, v = (int(p) for p in text.replace("-", ",").split(","))
    except ValueError:
        raise UsageError(f"--edge expects u,v, got {text!r}") from None
    return u, v


def cmd_critical_set(args) -> int:
    g, t = _load(args.instance)
    u, v = _parse_edge(args.edge)
    if not g.has_edge(u, v) or g.edge_id(u, v) not in t.tree_edge_ids:
        raise UsageError(f"{u}-{v} is not a tree edge")
    e = g.edge_id(u, v)
    cut = split_cut(g, t, e)
    compute_pairs(cut, t)
    res = construct_critical_set(cut, t)
    best = min_critical_set(cut, t)
    payload = {
        "edge": edge_label(g.edges[e]),
        "set": sorted(edge_label(f.endpoints) for f in res.edges),
        "case": res.case_tag,
        "iterations": res.iterations,
        "verified": res.verified,
        "min_size": len(best),
        "min_set": sorted(edge_label(f.endpoints) for f in best),
    }
    text = [
        f"edge {payload['edge']}: set {{{', '.join(payload['set'])}}} {res.case_tag} "
        f"{'verified' if res.verified else 'NOT verified'}, min size {len(best)}"
    ]
    if args.trace:
        tr = proof_trace(cut, t)
        payload["trace"] = tr.as_dict()
        text.append("trace: " + json.dumps(tr.as_dict(), sort_keys=True))
    _write_dot(args, g, t, {"red": [f.edge_id for f in res.edges], "blue": [e]})
    _emit(args, payload, "\n".join(text))
    ok = res.verified and len(best) <= 6 and res.case_tag != "FALLBACK"
    return 0 if ok else 1


def _int(kv: dict, key: str, default: int) -> int:
    try:
        return int(kv.get(key, default))
    except ValueError:
        raise UsageError(f"{key} must be an integer") from None


def cmd_verify(args) -> int:
    try:
        checks = parse_checks(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sources = [s for s in (args.instance, args.random, args.exhaustive) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --in, --random, --exhaustive")
    try:
        if args.instance:
            g, t = _load(args.instance)
            insts = [Instance(Path(args.instance).name, g, t)]
        elif args.exhaustive:
            kv = parse_kv(args.exhaustive)
            n = _int(kv, "n", 4)
            if not 3 <= n <= 6:
                raise UsageError("exhaustive mode needs 3 <= n <= 6")
            insts = list(exhaustive_corpus(n, _int(kv, "cap", 0)))
        else:
            kv = parse_kv(args.random)
            n_text = kv.get("n", "8-40")
            chords = kv.get("chords")
            if chords is None and "m" in kv:
                # m counts all edges; the cycle contributes n of them
                if "-" in n_text:
                    raise UsageError("m= needs a fixed n")
                chords = str(int(kv["m"]) - int(n_text))
            insts = list(
                random_corpus(
                    _int(kv, "count", 10),
                    n=n_text,
                    chords=chords or "2-n",
                    seed=_int(kv, "seed", args.seed),
                    model=kv.get("model", "cycle-chords"),
                    tree=kv.get("tree", "uniform-random"),
                    density=float(kv.get("density", 0.15)),
                )
            )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    started = time.perf_counter()
    report = run_campaign(
        insts, checks, jobs=args.jobs, out_dir=args.out_dir, phi_budget=args.phi_budget, seed=args.seed
    )
    elapsed = time.perf_counter() - started
    _emit(args, report, summarize(report))
    print(f"wall clock: {elapsed:.2f}s", file=sys.stderr)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="swapcrit", description="Best swap edges and critical sets of tree spanners.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, dot=True):
        sp.add_argument("--json", action="store_true", help="print the structured report")
        sp.add_argument("--report", help="also write the structured report to this file")
        if dot:
            sp.add_argument("--dot", help="write a Graphviz rendering of the instance")

    sp = sub.add_parser("gen", help="generate a .gts instance")
    sp.add_argument("--model", choices=("cycle-chords", "augment"), default="cycle-chords")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--chords", type=int, default=0)
    sp.add_argument("--density", type=float, default=None)
    sp.add_argument("--tree", choices=("uniform-random", "bfs", "dfs"), default="uniform-random")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.add_argument("--dot")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("stretch", help="stretch factor of the tree")
    sp.add_argument("instance")
    common(sp)
    sp.set_defaults(func=cmd_stretch)

    sp = sub.add_parser("best-swaps", help="best swap edges of every tree edge")
    sp.add_argument("instance")
    sp.add_argument("--engine", choices=("oracle", "pairs", "both"), default="pairs")
    common(sp)
    sp.set_defaults(func=cmd_best_swaps)

    sp = sub.add_parser("critical-set", help="critical set of one tree edge")
    sp.add_argument("instance")
    sp.add_argument("--edge", required=True, help="tree edge as u,v")
    sp.add_argument("--trace", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_critical_set)

    sp = sub.add_parser("verify", help="run a verification campaign")
    sp.add_argument("--in", dest="instance")
    sp.add_argument("--random", help="n=lo-hi,chords=lo-hi,count=K,seed=S[,model=..,tree=..]")
    sp.add_argument("--exhaustive", help="n=N[,cap=C]")
    sp.add_argument("--checks", default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.add_argument("--phi-budget", type=int, default=8, help="sampled phi triples per tree edge")
    sp.add_argument("--out-dir", default="counterexamples")
    common(sp, dot=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SwapCritError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
