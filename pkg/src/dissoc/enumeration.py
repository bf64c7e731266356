"""Brute-force enumeration of maximal dissociation sets.

The scan walks every one of the ``2**n`` vertex subsets of a graph, so it is
capped at 24 vertices, but within that budget it is an unimpeachable oracle:
it applies the definitions directly (degree-at-most-one inside the set, no
single-vertex augmentation possible) with no structural shortcuts.  The inner
loop is vectorised with numpy over fixed-size chunks of ascending bitmasks,
which keeps output order deterministic.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError

BRUTE_VERTEX_LIMIT = 24
_CHUNK_BITS = 20


class BudgetError(GraphError):
    """Input size exceeds the brute-force budget."""


def _check_budget(g: Graph) -> None:
    if g.n > BRUTE_VERTEX_LIMIT:
        raise BudgetError(
            f"brute-force enumeration is capped at {BRUTE_VERTEX_LIMIT} vertices "
            f"(got {g.n}); for trees and forests use treedp.count_mds_tree / "
            "count_mds_forest instead"
        )


def _maximal_masks_chunk(g: Graph, lo: int, hi: int) -> np.ndarray:
    """Maximal dissociation sets among the masks ``lo..hi-1``, ascending."""
    masks = np.arange(lo, hi, dtype=np.uint32)
    one = np.uint32(1)
    valid = np.ones(masks.shape, dtype=bool)
    # bit v of sat marks members v that already have a neighbour in the set
    sat = np.zeros(masks.shape, dtype=np.uint32)
    for v in range(g.n):
        dv = masks & np.uint32(g.adj_bits[v])
        inside = ((masks >> np.uint32(v)) & one).astype(bool)
        multi = (dv & (dv - one)).astype(bool)
        valid &= ~(inside & multi)
        paired = inside & dv.astype(bool) & ~multi
        sat |= paired.astype(np.uint32) << np.uint32(v)
    maximal = valid.copy()
    for u in range(g.n):
        du = masks & np.uint32(g.adj_bits[u])
        absent = ~((masks >> np.uint32(u)) & one).astype(bool)
        single = du.astype(bool) & ~(du & (du - one)).astype(bool)
        addable = absent & ((du == 0) | (single & ((du & sat) == 0)))
        maximal &= ~addable
    return masks[maximal]


def _scan(g: Graph):
    total = 1 << g.n
    step = 1 << _CHUNK_BITS
    for lo in range(0, total, step):
        yield _maximal_masks_chunk(g, lo, min(lo + step, total))


def enumerate_mds(g: Graph) -> list[int]:
    """All maximal dissociation sets of ``g`` as bitmasks, ascending."""
    _check_budget(g)
    out: list[int] = []
    for chunk in _scan(g):
        out.extend(int(m) for m in chunk)
    return out


def count_mds_brute(g: Graph) -> int:
    """Number of maximal dissociation sets, by exhaustive scan."""
    _check_budget(g)
    return sum(int(chunk.size) for chunk in _scan(g))


def count_restricted(g: Graph, include: int = 0, exclude: int = 0) -> int:
    """Count maximal dissociation sets containing ``include`` and disjoint
    from ``exclude`` (both vertex bitmasks).

    With both masks empty this equals the plain count.
    """
    if include & exclude:
        raise GraphError("include and exclude sets overlap")
    full = (1 << g.n) - 1
    if (include | exclude) & ~full:
        raise GraphError("include/exclude contain out-of-range vertices")
    return sum(
        1
        for s in enumerate_mds(g)
        if s & include == include and s & exclude == 0
    )
