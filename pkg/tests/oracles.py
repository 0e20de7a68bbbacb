"""Brute-force reference computations, independent of the library code paths."""

from collections import deque
from fractions import Fraction
from itertools import combinations


def bfs_table(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    table = []
    for s in range(n):
        dist = [None] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    q.append(w)
        table.append(dist)
    return table


def connected(n, edges):
    return all(d is not None for d in bfs_table(n, edges)[0])


def two_edge_connected(n, edges):
    edges = list(edges)
    if not connected(n, edges):
        return False
    return all(connected(n, edges[:i] + edges[i + 1:]) for i in range(len(edges)))


def stretch(n, graph_edges, tree_edges):
    dg = bfs_table(n, graph_edges)
    dt = bfs_table(n, tree_edges)
    return max(Fraction(dt[x][y], dg[x][y]) for x, y in combinations(range(n), 2))


def swap_stretch(n, graph_edges, tree_edges, e, f):
    g_minus = [uv for uv in graph_edges if set(uv) != set(e)]
    t_swap = [uv for uv in tree_edges if set(uv) != set(e)] + [f]
    return stretch(n, g_minus, t_swap)


def sides(n, tree_edges, e):
    """X = component of T - e holding min(e), as a set."""
    rest = [uv for uv in tree_edges if set(uv) != set(e)]
    d = bfs_table(n, rest)[min(e)]
    return {v for v in range(n) if d[v] is not None}


def swap_set(n, graph_edges, tree_edges, e):
    X = sides(n, tree_edges, e)
    out = []
    for u, v in graph_edges:
        if {u, v} == set(e):
            continue
        if (u in X) != (v in X):
            out.append((u, v) if u in X else (v, u))
    return out


def critical_family(n, graph_edges, tree_edges, e):
    """For each swap edge f, the set of swap edges g whose detour realizes the swap-restricted stretch."""
    S = swap_set(n, graph_edges, tree_edges, e)
    fam = {}
    for f in S:
        t_swap = [uv for uv in tree_edges if set(uv) != set(e)] + [f]
        dt = bfs_table(n, t_swap)
        vals = {g: dt[g[0]][g[1]] for g in S}
        top = max(vals.values())
        fam[f] = {g for g, v in vals.items() if v == top}
    return fam


def min_hitting(family):
    universe = sorted(set().union(*family))
    for k in range(len(universe) + 1):
        for cand in combinations(universe, k):
            c = set(cand)
            if all(c & s for s in family):
                return k
    raise AssertionError("unreachable")


def spanning_tree_count(n, edges):
    """Kirchhoff: determinant of a reduced Laplacian, in exact arithmetic."""
    L = [[Fraction(0)] * n for _ in range(n)]
    for u, v in edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    M = [row[1:] for row in L[1:]]
    size = n - 1
    det = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if M[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, size):
            fac = M[r][c] / M[c][c]
            for k in range(c, size):
                M[r][k] -= fac * M[c][k]
    return int(det)
