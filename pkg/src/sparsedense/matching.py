"""Maximum bipartite matching (Hopcroft-Karp) and the Kőnig independent set."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from sparsedense.graph import Graph
from sparsedense.recognizers import Side, TwoColoring

__all__ = ["MatchingResult", "bipartite_max_is", "hopcroft_karp"]

_FREE = -1


@dataclass(frozen=True)
class MatchingResult:
    matched_pairs: list[tuple[int, int]]
    """``(left, right)`` pairs sorted by left vertex."""

    @property
    def size(self) -> int:
        return len(self.matched_pairs)


def _check(g: Graph, coloring: TwoColoring) -> None:
    if not coloring.is_valid_for(g):
        raise ValueError("coloring is not a proper 2-coloring of the graph")


def _mate_arrays(g: Graph, coloring: TwoColoring) -> list[int]:
    side = coloring.side
    left = [v for v in range(g.n) if side[v] is Side.LEFT]
    nbrs = [sorted(g.adj[v]) for v in range(g.n)]
    mate = [_FREE] * g.n
    inf = g.n + 1
    dist = [inf] * g.n

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if mate[u] == _FREE:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                x = mate[w]
                if x == _FREE:
                    found = True
                elif dist[x] == inf:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        return found

    def dfs(u: int) -> bool:
        for w in nbrs[u]:
            x = mate[w]
            if x == _FREE or (dist[x] == dist[u] + 1 and dfs(x)):
                mate[u], mate[w] = w, u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in left:
            if mate[u] == _FREE:
                dfs(u)
    return mate


def hopcroft_karp(g: Graph, coloring: TwoColoring) -> MatchingResult:
    """Maximum-cardinality matching of a bipartite graph."""
    _check(g, coloring)
    mate = _mate_arrays(g, coloring)
    pairs = [(u, mate[u]) for u in range(g.n) if coloring.side[u] is Side.LEFT and mate[u] != _FREE]
    return MatchingResult(pairs)


def bipartite_max_is(g: Graph, coloring: TwoColoring) -> frozenset[int]:
    """Maximum independent set as the complement of a Kőnig minimum vertex cover.

    ``Z`` is everything reachable from unmatched LEFT vertices by alternating
    paths; the cover is ``(LEFT - Z) | (RIGHT & Z)``.
    """
    _check(g, coloring)
    mate = _mate_arrays(g, coloring)
    side = coloring.side
    reached = [False] * g.n
    queue = deque(u for u in range(g.n) if side[u] is Side.LEFT and mate[u] == _FREE)
    for u in queue:
        reached[u] = True
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            # LEFT -> RIGHT along non-matching edges, then RIGHT -> LEFT along its matching edge
            if reached[w] or mate[u] == w:
                continue
            reached[w] = True
            x = mate[w]
            if x != _FREE and not reached[x]:
                reached[x] = True
                queue.append(x)
    return frozenset(v for v in range(g.n) if reached[v] == (side[v] is Side.LEFT))
