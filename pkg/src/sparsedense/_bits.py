"""Bitmask helpers shared by the polynomial pipelines.

A vertex set over ``0..n-1`` is an ``int`` whose bit ``v`` is set iff ``v`` is a member.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def canonical_mask(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def neighborhood(masks: Sequence[int], mask: int) -> int:
    """Union of the open neighborhoods of the members of ``mask``."""
    out = 0
    for v in iter_bits(mask):
        out |= masks[v]
    return out


def find_independent(masks: Sequence[int], candidates: int, k: int) -> int | None:
    """Return a mask of ``k`` pairwise non-adjacent vertices drawn from ``candidates``.

    Depth-first over ascending vertex ids; each chosen vertex removes its neighbors
    from the remaining pool. Returns ``None`` when no such set exists.
    """
    if k <= 0:
        return 0
    if candidates.bit_count() < k:
        return None
    while candidates:
        low = candidates & -candidates
        candidates ^= low
        v = low.bit_length() - 1
        rest = find_independent(masks, candidates & ~masks[v], k - 1)
        if rest is not None:
            return rest | low
        if candidates.bit_count() < k:
            return None
    return None


def independent_subsets(masks: Sequence[int], candidates: int, max_size: int) -> Iterator[int]:
    """Yield every independent subset of ``candidates`` with at most ``max_size`` members.

    The empty set comes first; a subset is always yielded before its extensions.
    """
    yield 0
    if max_size <= 0:
        return
    stack = [(0, candidates)]
    while stack:
        chosen, pool = stack.pop()
        size = chosen.bit_count() + 1
        # reversed push keeps ascending order on pop
        frames = []
        while pool:
            low = pool & -pool
            pool ^= low
            v = low.bit_length() - 1
            grown = chosen | low
            yield grown
            if size < max_size:
                frames.append((grown, pool & ~masks[v]))
        stack.extend(reversed(frames))


def two_color_mask(masks: Sequence[int], mask: int) -> bool:
    """True iff the subgraph induced by ``mask`` is bipartite."""
    unseen = mask
    while unseen:
        root = unseen & -unseen
        unseen ^= root
        # frontier-by-frontier BFS; colors alternate per layer
        layer, color_a, color_b = root, root, 0
        flip = False
        while layer:
            nxt = 0
            for v in iter_bits(layer):
                nxt |= masks[v]
            nxt &= mask
            same = color_b if flip else color_a
            if nxt & same:
                return False
            nxt &= unseen
            unseen &= ~nxt
            if flip:
                color_a |= nxt
            else:
                color_b |= nxt
            flip = not flip
            layer = nxt
    return True
