"""Exponential-time reference implementations for cross-checking at small sizes.

Deliberately written against ``Graph.adj`` with plain sets and ``itertools`` only;
nothing here calls into the polynomial pipelines or their bitmask helpers.
Documented size limits are advisory.
"""

from __future__ import annotations

from itertools import combinations

from sparsedense.applications import ConflictInstance, WellCoveredStatus, WellCoveredVerdict
from sparsedense.graph import Graph
from sparsedense.partition import SparseDensePartition
from sparsedense.recognizers import ClassKind, ClassSpec

__all__ = [
    "brute_force_alpha",
    "brute_force_colorable",
    "brute_force_conflict_mst",
    "brute_force_conflict_path",
    "brute_force_max_is",
    "brute_force_partitions",
    "brute_force_well_covered",
    "bron_kerbosch_mis",
    "maximal_cliques",
]


def _order(sets) -> list[frozenset[int]]:
    return sorted((frozenset(s) for s in sets), key=lambda s: tuple(sorted(s)))


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with Tomita pivoting; canonical order."""
    out = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(p & g.adj[u]))
        for v in sorted(p - g.adj[pivot]):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        expand(set(), set(range(g.n)), set())
    else:
        out.append(frozenset())
    return _order(out)


def bron_kerbosch_mis(g: Graph) -> list[frozenset[int]]:
    """All maximal independent sets (n up to about 25), as cliques of the complement."""
    everyone = frozenset(range(g.n))
    co = Graph(g.n, tuple(everyone - g.adj[v] - {v} for v in range(g.n)))
    return maximal_cliques(co)


def _independent(g: Graph, s) -> bool:
    return all(v not in g.adj[u] for u, v in combinations(s, 2))


def _naive_bipartite(g: Graph, s: frozenset[int]) -> bool:
    color: dict[int, int] = {}
    for root in sorted(s):
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u] & s:
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _naive_member(kind: ClassKind, t: int | None, g: Graph, s: frozenset[int]) -> bool:
    if kind is ClassKind.EDGELESS:
        return _independent(g, s)
    if kind is ClassKind.BIPARTITE:
        return _naive_bipartite(g, s)
    return not any(_independent(g, c) for c in combinations(sorted(s), t))


def brute_force_partitions(g: Graph, spec: ClassSpec) -> list[SparseDensePartition]:
    """Filter all ``2^n`` ordered bipartitions (n up to about 16)."""
    out = []
    vertices = range(g.n)
    for bits in range(1 << g.n):
        s = frozenset(v for v in vertices if bits >> v & 1)
        d = frozenset(vertices) - s
        if _naive_member(spec.sparse.kind, spec.sparse.t, g, s) and _naive_member(
            spec.dense.kind, spec.dense.t, g, d
        ):
            out.append(SparseDensePartition(s, d))
    out.sort(key=lambda p: (-len(p.sparse_side), tuple(sorted(p.sparse_side))))
    return out


def brute_force_max_is(g: Graph) -> frozenset[int]:
    """Branch and bound over vertices (n up to about 20, more for sparse graphs)."""
    best: list[frozenset[int]] = [frozenset()]

    def search(chosen: frozenset[int], rest: frozenset[int]) -> None:
        if len(chosen) + len(rest) <= len(best[0]):
            return
        if not rest:
            best[0] = chosen
            return
        # a vertex of degree <= 1 in the remaining graph is always safe to take
        for v in sorted(rest):
            if len(g.adj[v] & rest) <= 1:
                search(chosen | {v}, rest - g.adj[v] - {v})
                return
        v = max(sorted(rest), key=lambda u: len(g.adj[u] & rest))
        search(chosen | {v}, rest - g.adj[v] - {v})
        search(chosen, rest - {v})

    search(frozenset(), frozenset(range(g.n)))
    return best[0]


def brute_force_alpha(g: Graph) -> int:
    return len(brute_force_max_is(g))


def brute_force_well_covered(g: Graph) -> WellCoveredVerdict:
    sets = bron_kerbosch_mis(g)
    first = sets[0]
    for other in sets[1:]:
        if len(other) != len(first):
            return WellCoveredVerdict(WellCoveredStatus.NOT_WELL_COVERED, witness_pair=(first, other))
    return WellCoveredVerdict(WellCoveredStatus.WELL_COVERED, common_size=len(first))


def brute_force_colorable(g: Graph, k: int) -> list[int] | None:
    """A proper ``k``-coloring by backtracking in vertex order, or ``None``."""
    color = [-1] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        used = {color[u] for u in g.adj[v] if u < v}
        for c in range(k):
            if c not in used:
                color[v] = c
                if place(v + 1):
                    return True
        color[v] = -1
        return False

    return list(color) if place(0) else None


def _conflict_free(instance: ConflictInstance, chosen) -> bool:
    cg = instance.conflict_graph
    return all(j not in cg.adj[i] for i, j in combinations(chosen, 2))


def brute_force_conflict_mst(instance: ConflictInstance):
    """Cheapest conflict-free spanning tree as ``(objective, edge indices)``, or ``None``.

    Tries every ``(n-1)``-subset of base edges.
    """
    base = instance.base
    if base.n <= 1:
        return 0, frozenset()
    best = None
    for subset in combinations(range(len(base.edges)), base.n - 1):
        comp = list(range(base.n))

        def root(x: int) -> int:
            while comp[x] != x:
                x = comp[x]
            return x

        acyclic = True
        for i in subset:
            a, b = (root(x) for x in base.edges[i])
            if a == b:
                acyclic = False
                break
            comp[a] = b
        if not acyclic or not _conflict_free(instance, subset):
            continue
        cost = sum((base.weights[i] for i in subset), 0)
        if best is None or cost < best[0]:
            best = (cost, frozenset(subset))
    return best


def brute_force_conflict_path(instance: ConflictInstance, source: int, target: int):
    """Cheapest conflict-free simple path as ``(objective, edge indices)``, or ``None``."""
    base = instance.base
    if source == target:
        return 0, frozenset()
    incident: dict[int, list[int]] = {v: [] for v in range(base.n)}
    for i, (u, v) in enumerate(base.edges):
        incident[u].append(i)
        incident[v].append(i)
    best = [None]

    def walk(v: int, visited: set[int], used: list[int], cost) -> None:
        if v == target:
            if best[0] is None or cost < best[0][0]:
                best[0] = (cost, frozenset(used))
            return
        for i in incident[v]:
            a, b = base.edges[i]
            w = b if a == v else a
            if w in visited or any(j in instance.conflict_graph.adj[i] for j in used):
                continue
            walk(w, visited | {w}, used + [i], cost + base.weights[i])

    walk(source, {source}, [], 0)
    return best[0]
