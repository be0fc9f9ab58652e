"""Maximal and maximum independent sets of sparse-dense graphs.

Given a partition ``V = S | D`` with ``D`` K̄_t-free, every independent set meets
``D`` in fewer than ``t`` vertices. Guessing that intersection ``R_D`` (polynomially
many choices) reduces both problems to the sparse side.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from sparsedense._bits import canonical_mask, from_mask, independent_subsets, iter_bits, neighborhood, to_mask
from sparsedense.graph import Graph, canonical, induced_subgraph, is_independent_set, vertex_set
from sparsedense.matching import bipartite_max_is
from sparsedense.partition import NotInClassError, SparseDensePartition, find_partition
from sparsedense.recognizers import BIPARTITE, EDGELESS, ClassId, ClassSpec, is_bipartite, recognize_mask

__all__ = [
    "ContractError",
    "DenseSideViolation",
    "MaxISResult",
    "MisCollection",
    "UnsupportedClassError",
    "enumerate_dense_side_is",
    "enumerate_maximal_is",
    "is_maximal_is",
    "max_is",
    "maximal_extension",
    "solve_max_is",
    "sparse_mis_enumerate",
]


class UnsupportedClassError(ValueError):
    pass


class ContractError(ValueError):
    pass


class DenseSideViolation(ContractError):
    """The dense side contains an independent set of ``t`` vertices."""

    def __init__(self, witness: frozenset[int], t: int):
        self.witness = witness
        super().__init__(f"dense side is not K̄_{t}-free: independent set {canonical(witness)}")


@dataclass
class MisCollection:
    sets: list[frozenset[int]]
    source_partition: SparseDensePartition

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.sets)

    def to_dict(self) -> dict:
        return {
            "count": len(self.sets),
            "sets": [list(canonical(s)) for s in self.sets],
            "partition": self.source_partition.to_dict(),
        }


@dataclass(frozen=True)
class MaxISResult:
    members: frozenset[int]
    dense_part: frozenset[int]
    """The ``R_D`` whose branch produced ``members``."""
    source_partition: SparseDensePartition

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "set": list(canonical(self.members)),
            "size": self.size,
            "R_D": list(canonical(self.dense_part)),
            "partition": self.source_partition.to_dict(),
        }


def _dense_side_masks(g: Graph, dense: int, t: int) -> list[int]:
    found = []
    for r in independent_subsets(g.masks, dense, t):
        if r.bit_count() >= t:
            raise DenseSideViolation(from_mask(r), t)
        found.append(r)
    return found


def enumerate_dense_side_is(g: Graph, dense: Iterable[int], t: int) -> list[frozenset[int]]:
    """Every independent subset of ``dense`` (all smaller than ``t``), including the empty set.

    Raises :class:`DenseSideViolation` if an independent ``t``-set turns up.
    """
    mask = to_mask(vertex_set(g, dense))
    found = _dense_side_masks(g, mask, t)
    found.sort(key=canonical_mask)
    return [from_mask(r) for r in found]


def sparse_mis_enumerate(g: Graph, sparse: Iterable[int], cls: ClassId) -> list[frozenset[int]]:
    """Maximal independent sets of the subgraph induced by ``sparse``."""
    s = vertex_set(g, sparse)
    if cls == BIPARTITE:
        raise UnsupportedClassError(
            "cannot enumerate maximal independent sets of a bipartite sparse side: "
            "their number can be exponential"
        )
    if cls != EDGELESS:
        raise UnsupportedClassError(f"unsupported sparse class {cls}")
    if not is_independent_set(g, s):
        raise ContractError("sparse side is not edgeless")
    return [s]


def maximal_extension(g: Graph, r_d: Iterable[int], r_s: Iterable[int]) -> frozenset[int]:
    """``r_d`` plus every vertex of ``r_s`` with no neighbor in ``r_d``.

    With both inputs independent this is the unique maximal independent set of
    ``g[r_d | r_s]`` containing ``r_d``.
    """
    r_d, r_s = vertex_set(g, r_d), vertex_set(g, r_s)
    if not is_independent_set(g, r_d) or not is_independent_set(g, r_s):
        raise ContractError("maximal_extension needs two independent sets")
    return r_d | {v for v in r_s if g.adj[v].isdisjoint(r_d)}


def is_maximal_is(g: Graph, s: Iterable[int]) -> bool:
    s = vertex_set(g, s)
    if not is_independent_set(g, s):
        return False
    return all(v in s or not g.adj[v].isdisjoint(s) for v in range(g.n))


def _partition_or_raise(g: Graph, spec: ClassSpec) -> SparseDensePartition:
    p = find_partition(g, spec)
    if p is None:
        raise NotInClassError(spec)
    return p


def enumerate_maximal_is(g: Graph, spec: ClassSpec) -> MisCollection:
    """All maximal independent sets of ``g``, in canonical order.

    Raises :class:`NotInClassError` when ``g`` has no partition for ``spec``.
    """
    if spec.sparse != EDGELESS:
        raise UnsupportedClassError(f"maximal independent set enumeration needs an edgeless sparse side, got {spec}")
    p = _partition_or_raise(g, spec)
    masks = g.masks
    dense = to_mask(p.dense_side)
    r_s_options = [to_mask(r) for r in sparse_mis_enumerate(g, p.sparse_side, spec.sparse)]
    found: set[int] = set()
    for r_d in _dense_side_masks(g, dense, spec.t):
        blocked = neighborhood(masks, r_d)
        for r_s in r_s_options:
            cand = r_d | (r_s & ~blocked)
            # vertices adjacent to r_d are dominated already; only the rest need a check
            rest = g.full_mask & ~cand & ~blocked
            if all(masks[u] & cand for u in iter_bits(rest)):
                found.add(cand)
    ordered = sorted(found, key=canonical_mask)
    return MisCollection([from_mask(m) for m in ordered], p)


def _sparse_max_is(g: Graph, candidates: int, cls: ClassId) -> int:
    if cls == EDGELESS:
        return candidates
    sub, id_map = induced_subgraph(g, from_mask(candidates))
    coloring, _ = is_bipartite(sub)
    if coloring is None:
        raise ContractError("sparse side is not bipartite")
    return to_mask(id_map[i] for i in bipartite_max_is(sub, coloring))


def solve_max_is(g: Graph, spec: ClassSpec) -> MaxISResult:
    """A maximum independent set with the dense-side guess that produced it.

    Among the largest candidates the one with the least ascending serialization wins.
    """
    if spec.sparse not in (EDGELESS, BIPARTITE):
        raise UnsupportedClassError(f"unsupported sparse class {spec.sparse}")
    p = _partition_or_raise(g, spec)
    masks = g.masks
    sparse = to_mask(p.sparse_side)
    if not recognize_mask(spec.sparse, g, sparse):
        raise ContractError("partition sparse side rejected by its class")
    best: tuple[int, tuple[int, ...], int, int] | None = None
    for r_d in _dense_side_masks(g, to_mask(p.dense_side), spec.t):
        reachable = sparse & ~neighborhood(masks, r_d)
        cand = r_d | _sparse_max_is(g, reachable, spec.sparse)
        key = (-cand.bit_count(), canonical_mask(cand), cand, r_d)
        if best is None or key[:2] < best[:2]:
            best = key
    assert best is not None
    return MaxISResult(from_mask(best[2]), from_mask(best[3]), p)


def max_is(g: Graph, spec: ClassSpec) -> frozenset[int]:
    """A maximum independent set of ``g``; raises :class:`NotInClassError` off-class."""
    return solve_max_is(g, spec).members
