"""Hereditary class recognizers and sparse/dense class pairs."""

from __future__ import annotations

import enum
import re
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from sparsedense._bits import find_independent, from_mask, to_mask, two_color_mask
from sparsedense.graph import Graph, induced_subgraph, vertex_set

__all__ = [
    "BIPARTITE",
    "EDGELESS",
    "ClassId",
    "ClassKind",
    "ClassSpec",
    "Side",
    "SpecError",
    "TwoColoring",
    "incremental_member",
    "independent_set_of_size",
    "is_bipartite",
    "is_edgeless",
    "is_kbar_free",
    "kbar_free",
    "parse_spec",
    "recognize",
]


class SpecError(ValueError):
    pass


class ClassKind(enum.Enum):
    EDGELESS = "edgeless"
    BIPARTITE = "bipartite"
    KBAR_FREE = "kbar_free"


@dataclass(frozen=True)
class ClassId:
    kind: ClassKind
    t: int | None = None

    def __post_init__(self) -> None:
        if self.kind is ClassKind.KBAR_FREE:
            if self.t is None or self.t < 1:
                raise SpecError("KBAR_FREE needs t >= 1")
        elif self.t is not None:
            raise SpecError(f"{self.kind.name} takes no parameter")

    def __str__(self) -> str:
        return f"KBAR_FREE({self.t})" if self.kind is ClassKind.KBAR_FREE else self.kind.name


EDGELESS = ClassId(ClassKind.EDGELESS)
BIPARTITE = ClassId(ClassKind.BIPARTITE)


def kbar_free(t: int) -> ClassId:
    """Graphs with no independent set of ``t`` vertices."""
    return ClassId(ClassKind.KBAR_FREE, t)


@dataclass(frozen=True)
class ClassSpec:
    """A sparse class paired with ``KBAR_FREE(t)``; ``c`` bounds any sparse/dense overlap.

    An edgeless graph that is also K̄_t-free has fewer than ``t`` vertices, hence
    ``c = t - 1``. A bipartite K̄_t-free graph has both color classes below ``t``,
    hence ``c = 2(t - 1)``.
    """

    sparse: ClassId
    dense: ClassId
    c: int
    t: int

    def __post_init__(self) -> None:
        if self.dense != kbar_free(self.t):
            raise SpecError("dense class must be KBAR_FREE(t)")
        if self.sparse == EDGELESS:
            expected = self.t - 1
        elif self.sparse == BIPARTITE:
            expected = 2 * (self.t - 1)
        else:
            raise SpecError(f"unsupported sparse class {self.sparse}")
        if self.c != expected:
            raise SpecError(f"c must be {expected} for {self.sparse}, got {self.c}")

    @classmethod
    def of(cls, sparse: ClassId, t: int) -> ClassSpec:
        if t < 1:
            raise SpecError("t must be >= 1")
        c = t - 1 if sparse == EDGELESS else 2 * (t - 1)
        return cls(sparse, kbar_free(t), c, t)

    @classmethod
    def kl(cls, k: int, l: int) -> ClassSpec:
        """The relaxation used for ``(k, l)``-graphs: ``k`` in {1, 2}, dense side K̄_{l+1}-free."""
        if k not in (1, 2) or l < 0:
            raise SpecError(f"unsupported (k, l) = ({k}, {l}); k must be 1 or 2 and l >= 0")
        return cls.of(EDGELESS if k == 1 else BIPARTITE, l + 1)

    def __str__(self) -> str:
        return f"{1 if self.sparse == EDGELESS else 2},{self.t - 1}"


_SPEC_RE = re.compile(r"\s*([12])\s*,\s*(\d+)\s*")


def parse_spec(text: str) -> ClassSpec:
    """Parse ``"1,L"`` (edgeless + K̄_{L+1}-free) or ``"2,L"`` (bipartite + K̄_{L+1}-free)."""
    match = _SPEC_RE.fullmatch(text)
    if not match:
        raise SpecError(f"bad class spec {text!r}; expected '1,L' or '2,L'")
    return ClassSpec.kl(int(match.group(1)), int(match.group(2)))


class Side(enum.IntEnum):
    LEFT = 0
    RIGHT = 1


@dataclass(frozen=True)
class TwoColoring:
    side: tuple[Side, ...]

    def left(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s is Side.LEFT)

    def right(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s is Side.RIGHT)

    def is_valid_for(self, g: Graph) -> bool:
        return len(self.side) == g.n and all(self.side[u] != self.side[v] for u, v in g.edges())


def is_edgeless(g: Graph) -> bool:
    return all(not nbrs for nbrs in g.adj)


def is_bipartite(g: Graph) -> tuple[TwoColoring | None, list[int] | None]:
    """BFS 2-coloring, component roots LEFT.

    Returns ``(coloring, None)`` for bipartite graphs and ``(None, odd_cycle)``
    otherwise, where ``odd_cycle`` lists the vertices of an odd cycle in order.
    """
    side: list[Side | None] = [None] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = Side.LEFT
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if side[w] is None:
                    side[w] = Side(1 - side[u])
                    parent[w], depth[w] = u, depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return None, _odd_cycle(u, w, parent, depth)
    return TwoColoring(tuple(side)), None


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    # u and w share a BFS layer parity and are adjacent; walk both up to their meeting point
    a, b = [u], [w]
    while depth[a[-1]] > depth[b[-1]]:
        a.append(parent[a[-1]])
    while depth[b[-1]] > depth[a[-1]]:
        b.append(parent[b[-1]])
    while a[-1] != b[-1]:
        a.append(parent[a[-1]])
        b.append(parent[b[-1]])
    return a + b[-2::-1]


def independent_set_of_size(g: Graph, t: int) -> frozenset[int] | None:
    """Some independent set of exactly ``t`` vertices, or ``None``."""
    found = find_independent(g.masks, g.full_mask, t)
    return None if found is None else from_mask(found)


def is_kbar_free(g: Graph, t: int) -> bool:
    """True iff ``g`` has no independent set of ``t`` vertices."""
    if t < 1:
        raise SpecError("t must be >= 1")
    return independent_set_of_size(g, t) is None


def recognize(cls: ClassId, g: Graph) -> bool:
    if cls.kind is ClassKind.EDGELESS:
        return is_edgeless(g)
    if cls.kind is ClassKind.BIPARTITE:
        return is_bipartite(g)[0] is not None
    return is_kbar_free(g, cls.t)


def incremental_member(cls: ClassId, g: Graph, already_member: Iterable[int], new_vertex: int) -> bool:
    """Whether ``already_member + new_vertex`` still induces a graph in ``cls``.

    Assumes ``already_member`` alone already does; that is not checked.
    """
    members = vertex_set(g, already_member)
    vertex_set(g, [new_vertex])
    return grows(cls, g.masks, to_mask(members), new_vertex)


def grows(cls: ClassId, masks, member_mask: int, v: int) -> bool:
    """Mask form of :func:`incremental_member`."""
    if cls.kind is ClassKind.EDGELESS:
        return not masks[v] & member_mask
    if cls.kind is ClassKind.KBAR_FREE:
        # a new independent t-set must use v plus t-1 independent non-neighbors
        return find_independent(masks, member_mask & ~masks[v], cls.t - 1) is None
    return two_color_mask(masks, member_mask | (1 << v))


def recognize_mask(cls: ClassId, g: Graph, mask: int) -> bool:
    if cls.kind is ClassKind.EDGELESS:
        return all(not g.masks[v] & mask for v in range(g.n) if mask >> v & 1)
    if cls.kind is ClassKind.KBAR_FREE:
        return find_independent(g.masks, mask, cls.t) is None
    return recognize(cls, induced_subgraph(g, from_mask(mask))[0])
