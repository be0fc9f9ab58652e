"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable. Vertex sets are plain ``frozenset[int]`` values; their
canonical serialization is the ascending tuple returned by :func:`canonical`.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from sparsedense._bits import to_mask

__all__ = [
    "Graph",
    "GraphFormatError",
    "canonical",
    "complement",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "generate_kl_graph",
    "induced_subgraph",
    "is_clique",
    "is_independent_set",
    "parse_dimacs",
    "parse_edge_list",
    "path_graph",
    "star_graph",
    "subdivide_edges",
    "to_dimacs",
    "to_edge_list",
    "vertex_set",
]


class GraphFormatError(ValueError):
    """Raised on malformed graph text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with ``adj[v]`` the neighbor set of ``v``."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must list exactly n neighbor sets")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in ascending order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks, for the hot loops."""
        return tuple(to_mask(s) for s in self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def vertex_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """Validate ``members`` against ``g`` and freeze it."""
    s = frozenset(members)
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise ValueError(f"vertex {v!r} out of range for n={g.n}")
    return s


def canonical(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


# -- text formats -------------------------------------------------------------


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _check_edge(u: int, v: int, n: int, lineno: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"vertex id out of range in edge ({u}, {v}) for n={n}", lineno)
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", lineno)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based ids).

    Blank lines are skipped and duplicate edges collapse to one edge.
    """
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input", 1)
    lineno, header = lines[0]
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    n, m = _ints(header, lineno)
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be nonnegative", lineno)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}", lineno)
    edges = []
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u, v = _ints(tokens, lineno)
        _check_edge(u, v, n, lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``p edge n m`` text with 1-based ``e u v`` lines."""
    n: int | None = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError("problem line must be 'p edge n m'", lineno)
            n, _ = _ints(tokens[2:], lineno)
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise GraphFormatError("edge line must be 'e u v'", lineno)
            u, v = _ints(tokens[1:], lineno)
            _check_edge(u - 1, v - 1, n, lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line 'p edge n m'")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def to_dimacs(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"p edge {g.n} {len(edges)}\n"] + [f"e {u + 1} {v + 1}\n" for u, v in edges])


# -- operations ---------------------------------------------------------------


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - nbrs - {v} for v, nbrs in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``; new vertex ``i`` is ``id_map[i]`` in ``g``."""
    id_map = canonical(vertex_set(g, s))
    index = {v: i for i, v in enumerate(id_map)}
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in id_map)
    return Graph(len(id_map), adj), id_map


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    s = vertex_set(g, s)
    return all(g.adj[v].isdisjoint(s) for v in s)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = vertex_set(g, s)
    return all(s - {v} <= g.adj[v] for v in s)


def subdivide_edges(g: Graph) -> Graph:
    """Replace every edge ``uv`` by a path ``u x y v`` through two new vertices.

    The ``j``-th edge in ascending order gets ``x = n + 2j`` and ``y = n + 2j + 1``.
    """
    edges = g.edges()
    new_edges = []
    for j, (u, v) in enumerate(edges):
        x, y = g.n + 2 * j, g.n + 2 * j + 1
        new_edges += [(u, x), (x, y), (y, v)]
    return Graph.from_edges(g.n + 2 * len(edges), new_edges)


# -- generators ---------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset() for _ in range(n)))


def complete_graph(n: int) -> Graph:
    return complement(empty_graph(n))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to leaves ``1..leaves``."""
    return complete_bipartite_graph(1, leaves)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, g.edges() + shifted)


def generate_kl_graph(
    k: int,
    l: int,
    part_sizes: Sequence[int],
    cross_edge_prob: float = 0.0,
    seed: int | None = 0,
    shuffle: bool = True,
) -> tuple[Graph, list[frozenset[int]]]:
    """Random graph with a planted partition into ``k`` independent sets and ``l`` cliques.

    Returns the graph and its parts (independent sets first, then cliques).
    Every pair of vertices in different parts is joined with probability
    ``cross_edge_prob``. With ``shuffle`` the vertex ids are permuted by the same
    seeded generator, so parts are not contiguous id ranges.
    """
    if k < 0 or l < 0:
        raise ValueError("part counts must be nonnegative")
    if len(part_sizes) != k + l:
        raise ValueError(f"expected {k + l} part sizes, got {len(part_sizes)}")
    if any(size < 0 for size in part_sizes):
        raise ValueError("part sizes must be nonnegative")
    if not 0.0 <= cross_edge_prob <= 1.0:
        raise ValueError("cross_edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    n = sum(part_sizes)
    owner = [i for i, size in enumerate(part_sizes) for _ in range(size)]
    label = list(range(n))
    if shuffle:
        rng.shuffle(label)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if owner[u] == owner[v]:
                if owner[u] >= k:
                    edges.append((label[u], label[v]))
            elif rng.random() < cross_edge_prob:
                edges.append((label[u], label[v]))
    parts = [frozenset(label[v] for v in range(n) if owner[v] == i) for i in range(k + l)]
    return Graph.from_edges(n, edges), parts
