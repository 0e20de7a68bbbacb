"""Optimal swap-edge pairs, critical sets and the checks built on them.

Swap edges of a cut are addressed by their index in ``cut.swap_edges``.  A
pair is a tuple ``(i, j)`` with ``i <= j``; because swap edges are sorted by
endpoint pair, lexicographic order on ``(i, j)`` is the canonical tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

import numpy as np

from .errors import EmptySwapSet, SideViolation
from .graphcore import CutContext, OrientedSwapEdge, SpanningTree, in_part, tx_edges
from .stretch import swap_stretch_fast

Pair = tuple[int, int]

SIZE2, SIZE4, SIZE6, FALLBACK = "SIZE2", "SIZE4", "SIZE6", "FALLBACK"
_CASE_BY_ROUNDS = {1: SIZE2, 2: SIZE4, 3: SIZE6}

PASS_CANONICAL = "PASS-CANONICAL"
PASS_ALTERNATIVE = "PASS-ALTERNATIVE"
VIOLATION = "VIOLATION"


@dataclass
class PairAssignment:
    """Per X-vertex maximum of phi and the pairs attaining it."""

    value: dict[int, int]
    canonical: dict[int, Pair]
    optimal: dict[int, tuple[Pair, ...]]

    def edges(self, cut: CutContext, x: int) -> tuple[OrientedSwapEdge, OrientedSwapEdge]:
        i, j = self.canonical[x]
        return cut.swap_edges[i], cut.swap_edges[j]


def _phi_idx(t: SpanningTree, cut: CutContext, x: int, pair: Pair) -> int:
    d = t.dist
    g, h = cut.swap_edges[pair[0]], cut.swap_edges[pair[1]]
    return int(d[x, g.a] + d[g.b, h.b] + d[h.a, x])


def phi(cut: CutContext, t: SpanningTree, x: int, g: OrientedSwapEdge, g2: OrientedSwapEdge) -> int:
    """``d_T(x, a) + d_T(b, b') + d_T(a', x)`` for ``g = (a, b)``, ``g2 = (a', b')``."""
    if not cut.in_x[x]:
        raise SideViolation(f"vertex {x} is not in X")
    for s in (g, g2):
        if not (cut.in_x[s.a] and not cut.in_x[s.b]):
            raise SideViolation(f"{s.label()} is not oriented X->Y")
    d = t.dist
    return int(d[x, g.a] + d[g.b, g2.b] + d[g2.a, x])


def compute_pairs(cut: CutContext, t: SpanningTree) -> PairAssignment:
    """Exhaustively maximize phi at every X vertex and cache the result on ``cut``."""
    k = len(cut.swap_edges)
    if k == 0:
        raise EmptySwapSet(f"tree edge {cut.e} has no swap edges")
    d = t.dist
    A, B = cut.a_arr, cut.b_arr
    bb = d[np.ix_(B, B)]
    iu, ju = np.triu_indices(k)
    value: dict[int, int] = {}
    canonical: dict[int, Pair] = {}
    optimal: dict[int, tuple[Pair, ...]] = {}
    for x in cut.X:
        dxa = d[x, A]
        vals = dxa[iu] + bb[iu, ju] + dxa[ju]
        best = int(vals.max())
        hits = np.flatnonzero(vals == best)
        pairs = tuple((int(iu[h]), int(ju[h])) for h in hits)
        value[x] = best
        canonical[x] = pairs[0]
        optimal[x] = pairs
    pa = PairAssignment(value, canonical, optimal)
    cut.pairs = pa
    return pa


def ensure_pairs(cut: CutContext, t: SpanningTree) -> PairAssignment:
    if cut.pairs is None:
        return compute_pairs(cut, t)
    return cut.pairs  # type: ignore[return-value]


def critical_edges_of(cut: CutContext, t: SpanningTree, f: OrientedSwapEdge) -> frozenset[OrientedSwapEdge]:
    return swap_stretch_fast(cut, t, f).critical_edges


def _critical_masks(cut: CutContext, t: SpanningTree) -> list[int]:
    """Bitmask over swap-edge indices of the critical edges, one per swap edge."""
    d = t.dist
    A, B = cut.a_arr, cut.b_arr
    # rows: f, columns: g
    table = d[np.ix_(A, A)] + 1 + d[np.ix_(B, B)]
    masks = []
    for row in table:
        hits = np.flatnonzero(row == row.max())
        m = 0
        for h in hits:
            m |= 1 << int(h)
        masks.append(m)
    return masks


def _pair_mask(pair: Pair) -> int:
    return (1 << pair[0]) | (1 << pair[1])


def _indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# ---------------------------------------------------------------------------
# Prior-work claim: a critical edge of f = (x, y) lies in the optimal pair at x


@dataclass
class Claim15Entry:
    f: OrientedSwapEdge
    status: str


@dataclass
class Claim15Report:
    entries: list[Claim15Entry]

    def count(self, status: str) -> int:
        return sum(1 for en in self.entries if en.status == status)

    @property
    def violations(self) -> list[Claim15Entry]:
        return [en for en in self.entries if en.status == VIOLATION]


def check_claim15(cut: CutContext, t: SpanningTree) -> Claim15Report:
    pa = ensure_pairs(cut, t)
    masks = _critical_masks(cut, t)
    entries = []
    for f, crit in zip(cut.swap_edges, masks):
        x = f.a
        if _pair_mask(pa.canonical[x]) & crit:
            status = PASS_CANONICAL
        elif any(_pair_mask(p) & crit for p in pa.optimal[x]):
            status = PASS_ALTERNATIVE
        else:
            status = VIOLATION
        entries.append(Claim15Entry(f, status))
    return Claim15Report(entries)


# ---------------------------------------------------------------------------
# Lemma: structure of a T_X edge where the optimal pair changes


@dataclass
class LemmaEntry:
    x: int
    z: int
    condition: str  # "i", "ii", "both" or "none"
    choice: str  # "canonical", "alternative" or "none"


@dataclass
class LemmaReport:
    entries: list[LemmaEntry] = field(default_factory=list)

    @property
    def violations(self) -> list[LemmaEntry]:
        return [en for en in self.entries if en.choice == "none"]


def _lemma_condition(t: SpanningTree, cut: CutContext, x: int, z: int, px: Pair, pz: Pair) -> str:
    ax = [cut.swap_edges[i].a for i in px]
    az = [cut.swap_edges[i].a for i in pz]

    def on_x(w: int) -> bool:
        return in_part(t, w, x, z)

    cond1 = all(on_x(w) for w in az) and any(not on_x(w) for w in ax)
    cond2 = all(not on_x(w) for w in ax) and any(on_x(w) for w in az)
    if cond1 and cond2:
        return "both"
    if cond1:
        return "i"
    if cond2:
        return "ii"
    return "none"


def mismatch(cut: CutContext, t: SpanningTree, x: int, z: int) -> bool:
    """True when the canonical pair at ``x`` is not optimal at ``z``."""
    pa = ensure_pairs(cut, t)
    return _phi_idx(t, cut, z, pa.canonical[x]) < pa.value[z]


def lemma_check(cut: CutContext, t: SpanningTree) -> LemmaReport:
    """Test the lemma on every oriented T_X edge whose premise holds canonically.

    When neither condition holds for the canonical pairs, every combination of
    optimal pairs at ``x`` and ``z`` is tried; a combination passes if it
    breaks the premise or satisfies a condition.
    """
    pa = ensure_pairs(cut, t)
    report = LemmaReport()
    for u, v in tx_edges(t, cut):
        for x, z in ((u, v), (v, u)):
            px, pz = pa.canonical[x], pa.canonical[z]
            if _phi_idx(t, cut, z, px) >= pa.value[z]:
                continue
            cond = _lemma_condition(t, cut, x, z, px, pz)
            if cond != "none":
                report.entries.append(LemmaEntry(x, z, cond, "canonical"))
                continue
            choice = "none"
            for qx, qz in product(pa.optimal[x], pa.optimal[z]):
                if _phi_idx(t, cut, z, qx) >= pa.value[z]:
                    choice = "alternative"
                    break
                c = _lemma_condition(t, cut, x, z, qx, qz)
                if c != "none":
                    cond, choice = c, "alternative"
                    break
            report.entries.append(LemmaEntry(x, z, cond, choice))
    return report


# ---------------------------------------------------------------------------
# Critical sets


def is_critical_set(cut: CutContext, t: SpanningTree, C: Iterable[OrientedSwapEdge]) -> bool:
    cmask = 0
    for g in C:
        cmask |= 1 << cut.index_of[g]
    return all(m & cmask for m in _critical_masks(cut, t))


@dataclass
class CriticalSetResult:
    edges: frozenset[OrientedSwapEdge]
    case_tag: str
    iterations: int
    verified: bool
    min_hitting_set_size: int | None = None


def construct_critical_set(cut: CutContext, t: SpanningTree) -> CriticalSetResult:
    """Greedy construction that follows the region argument.

    Start from the optimal pair at the X endpoint of ``e``; while some swap
    edge has no critical edge in the set, take the uncovered one whose X end
    is closest to that endpoint and add the optimal pair of its X end.
    """
    pa = ensure_pairs(cut, t)
    masks = _critical_masks(cut, t)
    d = t.dist
    x0 = cut.x_end
    cmask = _pair_mask(pa.canonical[x0])
    rounds = 1
    order = sorted(
        range(len(cut.swap_edges)),
        key=lambda i: (int(d[x0, cut.swap_edges[i].a]), cut.swap_edges[i].endpoints),
    )
    while True:
        pending = [i for i in order if not masks[i] & cmask]
        if not pending:
            break
        fi = pending[0]
        x = cut.swap_edges[fi].a
        add = _pair_mask(pa.canonical[x])
        if not add & masks[fi]:
            # canonical pair misses f; keep termination guaranteed
            alt = [p for p in pa.optimal[x] if _pair_mask(p) & masks[fi]]
            add = _pair_mask(alt[0]) if alt else masks[fi] & -masks[fi]
        cmask |= add
        rounds += 1
    edges = frozenset(cut.swap_edges[i] for i in _indices(cmask))
    verified = all(m & cmask for m in masks)
    tag = _CASE_BY_ROUNDS.get(rounds, FALLBACK)
    result = CriticalSetResult(edges, tag, rounds, verified)
    if tag == FALLBACK:
        result.min_hitting_set_size = len(min_critical_set(cut, t))
    return result


def _packing_bound(sets: list[int]) -> int:
    used = 0
    count = 0
    for s in sorted(sets, key=int.bit_count):
        if not s & used:
            used |= s
            count += 1
    return count


def min_hitting_set(family: Iterable[int], upper: int | None = None) -> int:
    """Exact minimum hitting set of a family of bitmasks, as a bitmask.

    ``upper`` is an optional known hitting set used as the initial incumbent.
    """
    fam = set(family)
    if 0 in fam:
        raise ValueError("empty member cannot be hit")
    # a superset is hit whenever one of its subsets is
    reduced = [s for s in fam if not any(o != s and o & s == o for o in fam)]
    if upper is None:
        upper = 0
        for s in reduced:
            if not s & upper:
                upper |= s & -s
    best = [upper, upper.bit_count()]

    def search(chosen: int, size: int, remaining: list[int]) -> None:
        if not remaining:
            if size < best[1]:
                best[0], best[1] = chosen, size
            return
        if size + _packing_bound(remaining) >= best[1]:
            return
        pivot = min(remaining, key=int.bit_count)
        for b in _indices(pivot):
            bit = 1 << b
            search(chosen | bit, size + 1, [s for s in remaining if not s & bit])

    search(0, 0, reduced)
    return best[0]


def min_critical_set(cut: CutContext, t: SpanningTree) -> frozenset[OrientedSwapEdge]:
    if not cut.swap_edges:
        return frozenset()
    masks = _critical_masks(cut, t)
    upper = None
    if cut.pairs is not None:
        # cheap incumbent: greedy cover from the pair at the X endpoint
        pa = cut.pairs
        upper = _pair_mask(pa.canonical[cut.x_end])  # type: ignore[attr-defined]
        for m in masks:
            if not m & upper:
                upper |= m & -m
    best = min_hitting_set(masks, upper)
    return frozenset(cut.swap_edges[i] for i in _indices(best))


def min_critical_set_size(cut: CutContext, t: SpanningTree) -> int:
    return len(min_critical_set(cut, t))


# ---------------------------------------------------------------------------
# Replay of the region argument


@dataclass
class ProofTrace:
    e_prime: tuple[int, int] | None = None
    e_prime_condition: str | None = None
    region_z_constant: bool | None = None
    region_z_breaks: list[int] = field(default_factory=list)
    e_second: tuple[int, int] | None = None
    e_second_condition: str | None = None
    region_y_constant: bool | None = None
    region_y_breaks: list[int] = field(default_factory=list)
    e_third: tuple[int, int] | None = None
    case: str = SIZE2

    @property
    def third_found(self) -> bool:
        return self.e_third is not None

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "e_prime": list(self.e_prime) if self.e_prime else None,
            "e_prime_condition": self.e_prime_condition,
            "region_z_constant": self.region_z_constant,
            "region_z_breaks": self.region_z_breaks,
            "e_second": list(self.e_second) if self.e_second else None,
            "e_second_condition": self.e_second_condition,
            "region_y_constant": self.region_y_constant,
            "region_y_breaks": self.region_y_breaks,
            "e_third": list(self.e_third) if self.e_third else None,
        }


def proof_trace(cut: CutContext, t: SpanningTree) -> ProofTrace:
    """Replay the three-region argument on one cut; findings only, never raises.

    Optimality of a pair at a vertex is judged by value (the pair attains the
    maximum there), so ties between equally good pairs do not count as
    region changes.
    """
    pa = ensure_pairs(cut, t)
    d = t.dist
    x0 = cut.x_end
    trace = ProofTrace()

    tadj: dict[int, list[int]] = {v: [] for v in cut.X}
    for u, v in tx_edges(t, cut):
        tadj[u].append(v)
        tadj[v].append(u)

    def optimal_at(v: int, pair: Pair) -> bool:
        return _phi_idx(t, cut, v, pair) == pa.value[v]

    def is_mismatch(pair: Pair, v: int) -> bool:
        return _phi_idx(t, cut, v, pair) < pa.value[v]

    oriented = sorted(
        ((x, z) for x in cut.X for z in tadj[x]),
        key=lambda xz: (int(d[x0, xz[0]]), xz[0], xz[1]),
    )
    first = next(((x, z) for x, z in oriented if is_mismatch(pa.canonical[x], z)), None)
    if first is None:
        return trace
    x, z = first
    P, Q = pa.canonical[x], pa.canonical[z]
    trace.e_prime = first
    trace.e_prime_condition = _lemma_condition(t, cut, x, z, P, Q)
    ux = [w for w in cut.X if in_part(t, w, x, z)]
    uz = [w for w in cut.X if not in_part(t, w, x, z)]
    trace.region_z_breaks = [w for w in uz if not optimal_at(w, Q)]
    trace.region_z_constant = not trace.region_z_breaks
    trace.case = SIZE4

    ux_set = set(ux)
    cands = sorted(
        (
            (int(d[x, xp]), xp, y)
            for xp in ux
            if optimal_at(xp, P)
            for y in tadj[xp]
            if y in ux_set and is_mismatch(P, y)
        )
    )
    if not cands:
        return trace
    _, xp, y = cands[0]
    R = pa.canonical[y]
    trace.e_second = (xp, y)
    trace.e_second_condition = _lemma_condition(t, cut, xp, y, P, R)
    uy = [w for w in cut.X if not in_part(t, w, xp, y)]
    trace.region_y_breaks = [w for w in uy if not optimal_at(w, R)]
    trace.region_y_constant = not trace.region_y_breaks
    trace.case = SIZE6

    region = {w for w in ux if in_part(t, w, xp, y)}
    third = sorted(
        (
            (int(d[x, xpp] + d[xp, xpp]), xpp, w)
            for xpp in region
            if optimal_at(xpp, P)
            for w in tadj[xpp]
            if w in region and is_mismatch(P, w)
        )
    )
    if third:
        trace.e_third = (third[0][1], third[0][2])
        trace.case = "BEYOND"
    return trace
