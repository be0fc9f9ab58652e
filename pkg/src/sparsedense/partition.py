"""Enumeration of sparse-dense partitions.

Vertices are added one at a time in id order. The working list always holds every
sparse-dense partition of the prefix graph: a prefix partition survives a step iff
the new vertex can join its sparse side or its dense side without leaving the
class. Both classes are hereditary, so restricting any partition of the whole
graph to a prefix gives a partition of the prefix, and nothing valid is lost.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass, field

from sparsedense._bits import canonical_mask, from_mask, to_mask
from sparsedense.graph import Graph, canonical, vertex_set
from sparsedense.recognizers import ClassSpec, grows, recognize_mask

__all__ = [
    "BoundWarning",
    "FailureReason",
    "NotInClassError",
    "PartitionCheck",
    "PartitionEnumeration",
    "SparseDensePartition",
    "enumerate_partitions",
    "find_partition",
    "verify_partition",
]


class NotInClassError(Exception):
    """The graph admits no sparse-dense partition for the requested class pair."""

    def __init__(self, spec: ClassSpec):
        self.spec = spec
        super().__init__(f"graph has no sparse-dense partition for spec {spec}")


@dataclass(frozen=True)
class SparseDensePartition:
    sparse_side: frozenset[int]
    dense_side: frozenset[int]

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        """Sort key: larger sparse side first, then ascending serialization."""
        return -len(self.sparse_side), canonical(self.sparse_side)

    def to_dict(self) -> dict:
        return {"S": list(canonical(self.sparse_side)), "D": list(canonical(self.dense_side))}


@dataclass(frozen=True)
class BoundWarning:
    step: int
    count: int
    bound: int


@dataclass
class PartitionEnumeration:
    partitions: list[SparseDensePartition]
    prefix_counts: list[int] = field(default_factory=list)
    bound_warnings: list[BoundWarning] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "count": len(self.partitions),
            "prefix_counts": self.prefix_counts,
            "bound_warnings": [vars(w) for w in self.bound_warnings],
        }


def _enumerate_masks(g: Graph, spec: ClassSpec) -> tuple[list[tuple[int, int]], list[int], list[BoundWarning]]:
    masks = g.masks
    work = [(0, 0)]
    counts: list[int] = []
    warnings: list[BoundWarning] = []
    for v in range(g.n):
        bit = 1 << v
        grown = []
        for s, d in work:
            if grows(spec.sparse, masks, s, v):
                grown.append((s | bit, d))
            if grows(spec.dense, masks, d, v):
                grown.append((s, d | bit))
        work = grown
        step = v + 1
        counts.append(len(work))
        # ordered pairs give 2 partitions of a single vertex, so the bound only applies from step 2
        bound = step ** (2 * spec.c)
        if step >= 2 and len(work) > bound:
            warnings.append(BoundWarning(step, len(work), bound))
    work.sort(key=lambda sd: (-sd[0].bit_count(), canonical_mask(sd[0])))
    return work, counts, warnings


def enumerate_partitions(g: Graph, spec: ClassSpec) -> PartitionEnumeration:
    """All sparse-dense partitions of ``g``, ordered by :attr:`SparseDensePartition.key`."""
    work, counts, warnings = _enumerate_masks(g, spec)
    parts = [SparseDensePartition(from_mask(s), from_mask(d)) for s, d in work]
    return PartitionEnumeration(parts, counts, warnings)


def find_partition(g: Graph, spec: ClassSpec) -> SparseDensePartition | None:
    """The canonically first partition, or ``None`` when ``g`` is not in the class."""
    work, _, _ = _enumerate_masks(g, spec)
    if not work:
        return None
    s, d = work[0]
    return SparseDensePartition(from_mask(s), from_mask(d))


class FailureReason(enum.Enum):
    OVERLAP = "overlap"
    COVER = "cover"
    SPARSE_SIDE = "sparse-side"
    DENSE_SIDE = "dense-side"


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    reason: FailureReason | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_partition(
    g: Graph,
    spec: ClassSpec,
    p: SparseDensePartition | tuple[Iterable[int], Iterable[int]],
) -> PartitionCheck:
    """Check that ``p`` splits ``V(g)`` into a sparse part and a dense part."""
    if isinstance(p, SparseDensePartition):
        s_side, d_side = p.sparse_side, p.dense_side
    else:
        s_side, d_side = p
    s = to_mask(vertex_set(g, s_side))
    d = to_mask(vertex_set(g, d_side))
    if s & d:
        return PartitionCheck(False, FailureReason.OVERLAP)
    if s | d != g.full_mask:
        return PartitionCheck(False, FailureReason.COVER)
    if not recognize_mask(spec.sparse, g, s):
        return PartitionCheck(False, FailureReason.SPARSE_SIDE)
    if not recognize_mask(spec.dense, g, d):
        return PartitionCheck(False, FailureReason.DENSE_SIDE)
    return PartitionCheck(True)
