"""Verification campaigns over instance corpora.

A campaign runs a selection of checks on every tree edge of every instance
and aggregates the outcome into a JSON-ready report.  Per-instance work is
independent, so it can be farmed out to processes; results are merged in
input order so the report does not depend on the degree of parallelism.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .bestswap import all_best_swap_edges
from .critical import (
    FALLBACK,
    PASS_ALTERNATIVE,
    PASS_CANONICAL,
    VIOLATION,
    _phi_idx,
    check_claim15,
    compute_pairs,
    construct_critical_set,
    lemma_check,
    min_critical_set_size,
    proof_trace,
)
from .graphcore import Graph, SpanningTree, edge_label, split_cut, tx_edges
from .instances import GenSpec, enumerate_instances, generate, rng_for, write_instance
from .stretch import baseline_stretch, swap_stretch_fast, swap_stretch_oracle

CHECKS = ("oracle", "claim15", "lemma", "theorem", "bestswap", "proof-trace", "phi")
REPORT_SCHEMA = "swapcrit.verify/1"


def parse_checks(text: str) -> tuple[str, ...]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    if not names:
        raise ValueError("at least one check is required")
    if "all" in names:
        return CHECKS
    bad = [c for c in names if c not in CHECKS]
    if bad:
        raise ValueError(f"unknown checks: {', '.join(bad)}")
    return tuple(c for c in CHECKS if c in names)


@dataclass
class Instance:
    label: str
    graph: Graph
    tree: SpanningTree


@dataclass
class InstanceResult:
    label: str
    counts: Counter = field(default_factory=Counter)
    violations: list[dict] = field(default_factory=list)
    min_sizes: list[int] = field(default_factory=list)


def _phi_samples(cut, t, pa, rng: np.random.Generator, budget: int, res: InstanceResult) -> None:
    """Random (x, u, pair) triples checked against symmetry, optimality and Lipschitz bounds."""
    X = cut.X
    k = len(cut.swap_edges)
    d = t.dist
    for _ in range(budget):
        x = X[int(rng.integers(len(X)))]
        u = X[int(rng.integers(len(X)))]
        i, j = int(rng.integers(k)), int(rng.integers(k))
        p, q = (i, j), (j, i)
        ok = True
        px = _phi_idx(t, cut, x, p)
        ok &= px == _phi_idx(t, cut, x, q)
        ok &= px <= pa.value[x]
        ok &= abs(px - _phi_idx(t, cut, u, p)) <= 2 * int(d[x, u])
        res.counts["phi:samples"] += 1
        if not ok:
            res.counts["phi:fail"] += 1
            res.violations.append(
                {"check": "phi", "detail": f"x={x} u={u} pair={cut.swap_edges[i].label()},{cut.swap_edges[j].label()}"}
            )
        else:
            res.counts["phi:pass"] += 1
    for x in X:
        ok = _phi_idx(t, cut, x, pa.canonical[x]) == pa.value[x]
        res.counts["phi:pass" if ok else "phi:fail"] += 1
        if not ok:
            res.violations.append({"check": "phi", "detail": f"canonical pair not optimal at {x}"})
    for u, v in tx_edges(t, cut):
        ok = abs(pa.value[u] - pa.value[v]) <= 2
        res.counts["phi:pass" if ok else "phi:fail"] += 1
        if not ok:
            res.violations.append({"check": "phi", "detail": f"Phi jumps by more than 2 on {u}-{v}"})


def check_instance(inst: Instance, checks: Iterable[str], phi_budget: int = 8, seed: int = 0) -> InstanceResult:
    g, t = inst.graph, inst.tree
    checks = set(checks)
    res = InstanceResult(inst.label)
    rng = rng_for(seed)
    res.counts["instances"] += 1
    for e in sorted(t.tree_edge_ids):
        cut = split_cut(g, t, e)
        pa = compute_pairs(cut, t)
        elabel = edge_label(g.edges[e])
        res.counts["tree_edges"] += 1

        def fail(check: str, detail: str) -> None:
            res.counts[f"{check}:fail"] += 1
            res.violations.append({"check": check, "edge": elabel, "detail": detail})

        if "oracle" in checks:
            base = baseline_stretch(g, t, cut)
            for f in cut.swap_edges:
                fast = swap_stretch_fast(cut, t, f).value
                slow = swap_stretch_oracle(g, t, e, f.edge_id)
                res.counts["oracle:literal_agree" if slow == fast else "oracle:literal_disagree"] += 1
                if slow == max(base, fast):
                    res.counts["oracle:pass"] += 1
                else:
                    fail("oracle", f"f={f.label()} fast={fast} baseline={base} oracle={slow}")

        if "claim15" in checks:
            rep = check_claim15(cut, t)
            for en in rep.entries:
                res.counts[f"claim15:{en.status}"] += 1
                if en.status == VIOLATION:
                    fail("claim15", f"f={en.f.label()}")
                else:
                    res.counts["claim15:pass"] += 1

        if "lemma" in checks:
            rep = lemma_check(cut, t)
            for en in rep.entries:
                res.counts[f"lemma:{en.choice}"] += 1
                if en.choice == "none":
                    fail("lemma", f"e'={en.x}-{en.z}")
                else:
                    res.counts["lemma:pass"] += 1
            res.counts["lemma:cuts"] += 1

        if "theorem" in checks:
            cs = construct_critical_set(cut, t)
            size = min_critical_set_size(cut, t)
            res.min_sizes.append(size)
            res.counts[f"theorem:case:{cs.case_tag}"] += 1
            problems = []
            if cs.case_tag == FALLBACK:
                problems.append(f"greedy needed {cs.iterations} rounds")
            if not cs.verified:
                problems.append("constructed set is not critical")
            if size > 6:
                problems.append(f"minimum critical set has size {size}")
            if size > len(cs.edges):
                problems.append("minimum exceeds constructed set")
            if problems:
                fail("theorem", "; ".join(problems))
            else:
                res.counts["theorem:pass"] += 1

        if "proof-trace" in checks:
            tr = proof_trace(cut, t)
            res.counts[f"proof-trace:case:{tr.case}"] += 1
            if tr.region_z_constant is False:
                res.counts["proof-trace:region_z_break"] += 1
            if tr.region_y_constant is False:
                res.counts["proof-trace:region_y_break"] += 1
            if tr.third_found:
                fail("proof-trace", f"third mismatch edge {tr.e_third[0]}-{tr.e_third[1]}")
            else:
                res.counts["proof-trace:pass"] += 1

        if "phi" in checks:
            _phi_samples(cut, t, pa, rng, phi_budget, res)

    if "bestswap" in checks:
        slow = all_best_swap_edges(g, t, "oracle")
        fast = all_best_swap_edges(g, t, "pairs")
        for a, b in zip(slow, fast):
            if a.same_result(b):
                res.counts["bestswap:pass"] += 1
            else:
                res.counts["bestswap:fail"] += 1
                res.violations.append(
                    {
                        "check": "bestswap",
                        "edge": edge_label(g.edges[a.e]),
                        "detail": f"oracle {a.best_value} {[f.label() for f in a.argmin]} "
                        f"vs pairs {b.best_value} {[f.label() for f in b.argmin]}",
                    }
                )
    return res


def _worker(args):
    inst, checks, phi_budget, seed = args
    return check_instance(inst, checks, phi_budget, seed)


# ---------------------------------------------------------------------------
# corpora


def exhaustive_corpus(n: int, tree_cap: int = 0) -> Iterator[Instance]:
    gi = -1
    last = None
    ti = 0
    for g, t in enumerate_instances(n, tree_cap):
        if g is not last:
            gi, last, ti = gi + 1, g, 0
        yield Instance(f"n{n}-g{gi}-t{ti}", g, t)
        ti += 1


def _resolve(bound: str, n: int | None) -> int:
    return n if bound == "n" and n is not None else int(bound)


def _range(text: str, n: int | None = None) -> tuple[int, int]:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return _resolve(lo, n), _resolve(hi, n)
    v = _resolve(text, n)
    return v, v


def random_corpus(
    count: int,
    n: str = "8-40",
    chords: str = "2-n",
    seed: int = 0,
    model: str = "cycle-chords",
    tree: str = "uniform-random",
    density: float = 0.15,
) -> Iterator[Instance]:
    """Seeded random instances; ``n`` and ``chords`` accept ``lo-hi`` ranges, ``n`` in a bound means the vertex count."""
    master = rng_for(seed)
    for i in range(count):
        lo, hi = _range(n)
        nv = int(master.integers(lo, hi + 1))
        clo, chi = _range(chords, nv)
        k = int(master.integers(clo, chi + 1))
        sub = int(master.integers(2**63))
        spec = GenSpec(model=model, n=nv, chords=k, density=density, seed=sub, tree=tree)
        g, t = generate(spec)
        yield Instance(f"rand-{i}-n{nv}-s{sub}", g, t)


def parse_kv(text: str) -> dict[str, str]:
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


# ---------------------------------------------------------------------------
# aggregation


def run_campaign(
    instances: Iterable[Instance],
    checks: Iterable[str] = CHECKS,
    *,
    jobs: int = 1,
    out_dir: str | os.PathLike | None = None,
    phi_budget: int = 8,
    seed: int = 0,
) -> dict:
    checks = tuple(c for c in CHECKS if c in set(checks))
    if not checks:
        raise ValueError("at least one check is required")
    insts = list(instances)
    tasks = [(inst, checks, phi_budget, seed + i) for i, inst in enumerate(insts)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (jobs * 8))))
    else:
        results = [_worker(task) for task in tasks]

    totals: Counter = Counter()
    min_hist: Counter = Counter()
    violations = []
    files = []
    out = Path(out_dir) if out_dir is not None else Path("counterexamples")
    for inst, res in zip(insts, results):
        totals.update(res.counts)
        min_hist.update(res.min_sizes)
        if res.violations:
            out.mkdir(parents=True, exist_ok=True)
            path = out / f"cx_{len(files):04d}_{inst.label}.gts"
            head = f"# counterexample from {inst.label}: " + ", ".join(
                sorted({v["check"] for v in res.violations})
            )
            path.write_bytes(head.encode("ascii") + b"\n" + write_instance(inst.graph, inst.tree))
            files.append(str(path))
            for v in res.violations:
                violations.append({"instance": inst.label, "file": str(path), **v})
    return build_report(checks, totals, min_hist, violations, files)


def build_report(checks, totals: Counter, min_hist: Counter, violations: list, files: list) -> dict:
    per_check = {
        c: {"pass": totals.get(f"{c}:pass", 0), "fail": totals.get(f"{c}:fail", 0)} for c in checks
    }
    report = {
        "schema": REPORT_SCHEMA,
        "checks": list(checks),
        "instances": totals.get("instances", 0),
        "tree_edges": totals.get("tree_edges", 0),
        "results": per_check,
        "violations": violations,
        "counterexample_files": files,
        "ok": not violations,
    }
    if "oracle" in checks:
        report["oracle_literal"] = {
            "agree": totals.get("oracle:literal_agree", 0),
            "disagree": totals.get("oracle:literal_disagree", 0),
        }
    if "claim15" in checks:
        report["claim15_split"] = {
            s: totals.get(f"claim15:{s}", 0) for s in (PASS_CANONICAL, PASS_ALTERNATIVE, VIOLATION)
        }
    if "lemma" in checks:
        report["lemma_split"] = {s: totals.get(f"lemma:{s}", 0) for s in ("canonical", "alternative", "none")}
    if "theorem" in checks:
        report["case_histogram"] = {
            s: totals.get(f"theorem:case:{s}", 0) for s in ("SIZE2", "SIZE4", "SIZE6", "FALLBACK")
        }
        report["min_hitting_set_histogram"] = {str(k): min_hist[k] for k in sorted(min_hist)}
        report["max_min_hitting_set"] = max(min_hist) if min_hist else 0
    if "proof-trace" in checks:
        report["trace_histogram"] = {
            s: totals.get(f"proof-trace:case:{s}", 0) for s in ("SIZE2", "SIZE4", "SIZE6", "BEYOND")
        }
        report["trace_region_breaks"] = {
            "z": totals.get("proof-trace:region_z_break", 0),
            "y": totals.get("proof-trace:region_y_break", 0),
        }
    if "phi" in checks:
        report["phi_samples"] = totals.get("phi:samples", 0)
    return report


def summarize(report: dict) -> str:
    lines = [f"instances: {report['instances']}  tree edges: {report['tree_edges']}"]
    for c, r in report["results"].items():
        lines.append(f"  {c:<12} pass {r['pass']:>8}  fail {r['fail']:>6}")
    for key in ("oracle_literal", "claim15_split", "lemma_split", "case_histogram",
                "min_hitting_set_histogram", "trace_histogram"):
        if key in report:
            body = "  ".join(f"{k}={v}" for k, v in report[key].items())
            lines.append(f"  {key}: {body}")
    if report["counterexample_files"]:
        lines.append(f"  counterexamples written: {len(report['counterexample_files'])}")
    lines.append("OK" if report["ok"] else "VIOLATIONS FOUND")
    return "\n".join(lines)
