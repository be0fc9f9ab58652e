"""Well-covered testing and conflict-free spanning trees / shortest paths."""

from __future__ import annotations

import enum
import heapq
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from sparsedense.graph import Graph, GraphFormatError, canonical
from sparsedense.independent import UnsupportedClassError, enumerate_maximal_is
from sparsedense.partition import NotInClassError
from sparsedense.recognizers import EDGELESS, ClassSpec

__all__ = [
    "ConflictInstance",
    "ConflictSolution",
    "WeightedGraph",
    "WellCoveredStatus",
    "WellCoveredVerdict",
    "conflict_free_mst",
    "conflict_free_shortest_path",
    "format_conflict_instance",
    "is_well_covered",
    "parse_conflict_instance",
]

Weight = int | Fraction


class WellCoveredStatus(enum.Enum):
    WELL_COVERED = "WELL_COVERED"
    NOT_WELL_COVERED = "NOT_WELL_COVERED"
    NOT_IN_CLASS = "NOT_IN_CLASS"


@dataclass(frozen=True)
class WellCoveredVerdict:
    status: WellCoveredStatus
    common_size: int | None = None
    witness_pair: tuple[frozenset[int], frozenset[int]] | None = None

    def to_dict(self) -> dict:
        out: dict = {"status": self.status.value}
        if self.common_size is not None:
            out["common_size"] = self.common_size
        if self.witness_pair is not None:
            out["witness_pair"] = [list(canonical(s)) for s in self.witness_pair]
        return out


def verdict_from_sets(sets: Sequence[frozenset[int]]) -> WellCoveredVerdict:
    """Verdict for a canonically ordered family of all maximal independent sets."""
    first = sets[0]
    for other in sets[1:]:
        if len(other) != len(first):
            return WellCoveredVerdict(WellCoveredStatus.NOT_WELL_COVERED, witness_pair=(first, other))
    return WellCoveredVerdict(WellCoveredStatus.WELL_COVERED, common_size=len(first))


def is_well_covered(g: Graph, spec: ClassSpec) -> WellCoveredVerdict:
    """Decide whether all maximal independent sets of ``g`` have equal size.

    No partition is needed as input; one is searched for, and its absence yields
    ``NOT_IN_CLASS``.
    """
    if spec.sparse != EDGELESS:
        raise UnsupportedClassError(f"well-covered testing needs an edgeless sparse side, got {spec}")
    try:
        mis = enumerate_maximal_is(g, spec)
    except NotInClassError:
        return WellCoveredVerdict(WellCoveredStatus.NOT_IN_CLASS)
    return verdict_from_sets(mis.sets)


# -- conflict-free problems ---------------------------------------------------


@dataclass(frozen=True)
class WeightedGraph:
    """Base graph whose edge ``i`` is ``edges[i]`` with weight ``weights[i]``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.weights):
            raise ValueError("every edge needs a weight")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        if any(w < 0 for w in self.weights):
            raise ValueError("edge weights must be nonnegative")

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


@dataclass(frozen=True)
class ConflictInstance:
    """A weighted base graph and a conflict graph whose vertex ``i`` is base edge ``i``."""

    base: WeightedGraph
    conflict_graph: Graph

    def __post_init__(self) -> None:
        if self.conflict_graph.n != len(self.base.edges):
            raise ValueError("conflict graph order must equal the base edge count")

    @property
    def edge_index_map(self) -> tuple[tuple[int, int], ...]:
        return self.base.edges


@dataclass(frozen=True)
class ConflictSolution:
    chosen_edges: frozenset[int]
    objective: Weight
    feasibility_certificate: frozenset[int]
    path: tuple[int, ...] | None = field(default=None)

    def to_dict(self, instance: ConflictInstance) -> dict:
        edges = instance.base.edges
        out = {
            "objective": _weight_json(self.objective),
            "chosen_edges": [list(edges[i]) for i in canonical(self.chosen_edges)],
            "chosen_edge_indices": list(canonical(self.chosen_edges)),
            "certificate": list(canonical(self.feasibility_certificate)),
        }
        if self.path is not None:
            out["path"] = list(self.path)
        return out


def _weight_json(w: Weight) -> int | str:
    w = Fraction(w)
    return int(w) if w.denominator == 1 else str(w)


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _kruskal(base: WeightedGraph, allowed: frozenset[int]) -> list[int] | None:
    if base.n <= 1:
        return []
    order = sorted(allowed, key=lambda i: (base.weights[i], i))
    forest = _DisjointSets(base.n)
    tree = []
    for i in order:
        u, v = base.edges[i]
        if forest.union(u, v):
            tree.append(i)
            if len(tree) == base.n - 1:
                return tree
    return None


def _dijkstra(base: WeightedGraph, allowed: frozenset[int], source: int, target: int):
    incident: list[list[int]] = [[] for _ in range(base.n)]
    for i in sorted(allowed):
        u, v = base.edges[i]
        incident[u].append(i)
        incident[v].append(i)
    dist: dict[int, Weight] = {source: 0}
    via: dict[int, int] = {}
    done = set()
    heap: list = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == target:
            break
        for i in incident[u]:
            a, b = base.edges[i]
            w = b if a == u else a
            nd = d + base.weights[i]
            if w not in dist or nd < dist[w]:
                dist[w] = nd
                via[w] = i
                heapq.heappush(heap, (nd, w))
    if target not in done:
        return None
    path, used, v = [target], [], target
    while v != source:
        i = via[v]
        used.append(i)
        a, b = base.edges[i]
        v = a if b == v else b
        path.append(v)
    return dist[target], frozenset(used), tuple(reversed(path))


def _certificates(instance: ConflictInstance, spec: ClassSpec) -> list[frozenset[int]]:
    # raises NotInClassError when the conflict graph has no partition
    return enumerate_maximal_is(instance.conflict_graph, spec).sets


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen, stack = {0}, [0]
    while stack:
        for w in g.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def conflict_free_mst(instance: ConflictInstance, spec: ClassSpec) -> ConflictSolution | None:
    """Minimum spanning tree using no two conflicting edges, or ``None`` if infeasible.

    For each maximal independent set ``C`` of the conflict graph, every edge outside
    ``C`` conflicts with some edge of ``C`` (maximality), so removing conflicting
    elements leaves exactly ``C``. Any conflict-free tree lies inside some ``C``.
    """
    if not _is_connected(instance.base.graph):
        return None
    best = None
    for cert in _certificates(instance, spec):
        tree = _kruskal(instance.base, cert)
        if tree is None:
            continue
        cost = sum((instance.base.weights[i] for i in tree), 0)
        if best is None or cost < best.objective:
            best = ConflictSolution(frozenset(tree), cost, cert)
    return best


def conflict_free_shortest_path(
    instance: ConflictInstance, source: int, target: int, spec: ClassSpec
) -> ConflictSolution | None:
    """Cheapest ``source``-``target`` path using no two conflicting edges, or ``None``."""
    n = instance.base.n
    if not (0 <= source < n and 0 <= target < n):
        raise ValueError(f"source/target out of range for n={n}")
    best = None
    for cert in _certificates(instance, spec):
        found = _dijkstra(instance.base, cert, source, target)
        if found is None:
            continue
        cost, used, path = found
        if best is None or cost < best.objective:
            best = ConflictSolution(used, cost, cert, path)
    return best


# -- file format --------------------------------------------------------------


def _parse_weight(token: str, lineno: int) -> Weight:
    try:
        w = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphFormatError(f"bad weight {token!r}", lineno) from None
    if w < 0:
        raise GraphFormatError("negative weight", lineno)
    return int(w) if w.denominator == 1 else w


def parse_conflict_instance(text: str) -> ConflictInstance:
    """Parse a conflict instance.

    Layout::

        n m
        u v w        (m lines; edge i is the i-th line, 0-based)
        conflicts k
        i j          (k lines of conflicting edge indices)

    The ``conflicts`` section may be omitted when there are no conflicts.
    """
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input", 1)
    lineno, header = lines[0]
    try:
        n, m = (int(tok) for tok in header)
    except ValueError:
        raise GraphFormatError("header must be 'n m'", lineno) from None
    if len(lines) < 1 + m:
        raise GraphFormatError(f"expected {m} weighted edge lines", lineno)
    edges, weights = [], []
    seen = set()
    for lineno, tokens in lines[1 : 1 + m]:
        if len(tokens) != 3:
            raise GraphFormatError("edge line must be 'u v w'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError("vertex ids must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if (min(u, v), max(u, v)) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
        weights.append(_parse_weight(tokens[2], lineno))
    rest = lines[1 + m :]
    conflicts = []
    if rest:
        lineno, tokens = rest[0]
        if len(tokens) != 2 or tokens[0] != "conflicts":
            raise GraphFormatError("expected 'conflicts k'", lineno)
        try:
            k = int(tokens[1])
        except ValueError:
            raise GraphFormatError("conflict count must be an integer", lineno) from None
        if len(rest) - 1 != k:
            raise GraphFormatError(f"expected {k} conflict lines, found {len(rest) - 1}", lineno)
        for lineno, tokens in rest[1:]:
            if len(tokens) != 2:
                raise GraphFormatError("conflict line must be 'i j'", lineno)
            try:
                i, j = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise GraphFormatError("edge indices must be integers", lineno) from None
            if not (0 <= i < m and 0 <= j < m) or i == j:
                raise GraphFormatError(f"bad conflict pair ({i}, {j})", lineno)
            conflicts.append((i, j))
    base = WeightedGraph(n, tuple(edges), tuple(weights))
    return ConflictInstance(base, Graph.from_edges(m, conflicts))


def format_conflict_instance(instance: ConflictInstance) -> str:
    base = instance.base
    lines = [f"{base.n} {len(base.edges)}"]
    lines += [f"{u} {v} {w}" for (u, v), w in zip(base.edges, base.weights)]
    conflicts = instance.conflict_graph.edges()
    lines.append(f"conflicts {len(conflicts)}")
    lines += [f"{i} {j}" for i, j in conflicts]
    return "\n".join(lines) + "\n"
