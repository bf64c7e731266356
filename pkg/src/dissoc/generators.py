"""Isomorph-free exhaustive generation of free trees and forests, the named
extremal constructions, and the leaf/edge rewiring transformations.

Free trees are generated through their centroid: a tree either has a unique
centroid vertex (every branch at it holds at most ``floor((n-1)/2)``
vertices) or two adjacent centroids joined by an edge that splits the tree
into two halves of ``n/2`` vertices each.  Unicentroid trees are therefore
produced as a root plus a multiset of rooted subtrees capped at the branch
bound, bicentroid trees as unordered pairs of rooted trees of order ``n/2``;
rooted catalogs are themselves built recursively from subtree multisets.
Multisets are drawn with ``combinations_with_replacement`` over catalogs in a
fixed order, so the stream is deterministic and each isomorphism class
appears exactly once, with no canonical-form rejection step.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import chain, combinations_with_replacement, product
from typing import Iterator

from .graph import Graph, GraphError, degree, disjoint_union, edge_list, is_tree, make_graph

MAX_GEN_ORDER = 20

# Isomorphism classes of free trees on 1..20 vertices; index by order.
FREE_TREE_COUNTS = (
    0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551,
    1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065,
)


# ---------------------------------------------------------------------------
# partitions and rooted-tree catalogs
# ---------------------------------------------------------------------------

def _partitions(total: int, max_part: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``total`` with parts in ``min_part..max_part``,
    parts non-increasing, decreasing lexicographic order."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), min_part - 1, -1):
        for rest in _partitions(total - first, first, min_part):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _rooted_trees(size: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All rooted trees on ``size`` vertices as edge tuples, root 0.

    Isomorph-free by induction: a rooted tree is its multiset of rooted
    subtrees, and multisets over already-deduplicated catalogs are drawn
    once each.
    """
    if size == 1:
        return ((),)
    out = []
    for part in _partitions(size - 1, size - 1):
        for combo in _subtree_combos(part):
            out.append(_attach(combo))
    return tuple(out)


def _subtree_combos(part: tuple[int, ...]) -> Iterator[tuple[tuple[tuple[int, int], ...], ...]]:
    """All multisets of rooted subtrees whose sizes realise ``part``."""
    groups: list[tuple[int, int]] = []
    for s in part:
        if groups and groups[-1][0] == s:
            groups[-1] = (s, groups[-1][1] + 1)
        else:
            groups.append((s, 1))
    pools = [combinations_with_replacement(_rooted_trees(s), c) for s, c in groups]
    for pick in product(*pools):
        yield tuple(chain.from_iterable(pick))


def _attach(subtrees) -> tuple[tuple[int, int], ...]:
    """Hang rooted subtrees under a fresh root 0, offsetting labels."""
    edges = []
    off = 1
    for sub in subtrees:
        edges.append((0, off))
        edges.extend((a + off, b + off) for a, b in sub)
        off += len(sub) + 1
    return tuple(edges)


# ---------------------------------------------------------------------------
# free trees and forests
# ---------------------------------------------------------------------------

def gen_free_trees(n: int) -> Iterator[Graph]:
    """Every isomorphism class of trees on ``n`` vertices, exactly once,
    in a deterministic order."""
    if not 1 <= n <= MAX_GEN_ORDER:
        raise GraphError(f"tree generation supports orders 1..{MAX_GEN_ORDER}, got {n}")
    if n == 1:
        yield make_graph(1, [])
        return
    cap = (n - 1) // 2
    for part in _partitions(n - 1, cap):
        for combo in _subtree_combos(part):
            yield make_graph(n, _attach(combo))
    if n % 2 == 0:
        half = _rooted_trees(n // 2)
        h = n // 2
        for i in range(len(half)):
            for j in range(i, len(half)):
                edges = [(0, h)]
                edges.extend(half[i])
                edges.extend((a + h, b + h) for a, b in half[j])
                yield make_graph(n, edges)


@lru_cache(maxsize=None)
def free_tree_catalog(n: int) -> tuple[Graph, ...]:
    """Materialised, cached tree stream for orders that get re-used."""
    return tuple(gen_free_trees(n))


def gen_forests(n: int, min_component: int = 1) -> Iterator[Graph]:
    """Every isomorphism class of forests on ``n`` vertices whose components
    all have at least ``min_component`` vertices, exactly once.

    Component sizes follow integer partitions in decreasing order; equal-size
    components are unordered multisets over the cached tree catalogs.
    """
    if not 1 <= n:
        raise GraphError(f"forest order must be positive, got {n}")
    if min_component < 1:
        raise GraphError(f"min_component must be at least 1, got {min_component}")
    for part in _partitions(n, n, min_component):
        groups: list[tuple[int, int]] = []
        for s in part:
            if groups and groups[-1][0] == s:
                groups[-1] = (s, groups[-1][1] + 1)
            else:
                groups.append((s, 1))
        pools = [
            combinations_with_replacement(range(len(free_tree_catalog(s))), c)
            for s, c in groups
        ]
        for pick in product(*pools):
            parts_graphs = []
            for (s, _), idxs in zip(groups, pick):
                catalog = free_tree_catalog(s)
                parts_graphs.extend(catalog[i] for i in idxs)
            yield disjoint_union(parts_graphs)


# ---------------------------------------------------------------------------
# named constructions
# ---------------------------------------------------------------------------

def path(k: int) -> Graph:
    """Path on ``k`` vertices."""
    return make_graph(k, [(i, i + 1) for i in range(k - 1)])


def star(k: int) -> Graph:
    """Star with ``k`` leaves around center 0 (order ``k + 1``)."""
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def build_t_star(n: int) -> Graph:
    """Hub joined to ``(n-1)/3`` cherry centers, each carrying two leaves;
    defined for ``n >= 4`` with ``n = 1 (mod 3)``."""
    if n < 4 or n % 3 != 1:
        raise GraphError(f"t-star requires n >= 4 with n = 1 (mod 3), got {n}")
    edges = []
    for i in range((n - 1) // 3):
        c = 1 + 3 * i
        edges += [(0, c), (c, c + 1), (c, c + 2)]
    return make_graph(n, edges)


def build_t_star_8() -> Graph:
    """Two 3-leaf stars joined by an edge between one leaf of each."""
    return make_graph(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (3, 5)])


def build_t_star_9() -> Graph:
    """Two 3-leaf stars bridged through one extra middle vertex of degree 2."""
    return make_graph(9, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (8, 3), (8, 5)])


def build_f1_extremal(n: int) -> Graph:
    """The unique forest of order ``n >= 3`` attaining the forest maximum."""
    if n < 3:
        raise GraphError(f"f1 extremal forest requires n >= 3, got {n}")
    if n == 5:
        return star(4)
    r = n % 3
    if r == 0:
        return disjoint_union([path(3)] * (n // 3))
    if r == 1:
        return disjoint_union([path(3)] * ((n - 4) // 3) + [star(3)])
    return disjoint_union([path(3)] * ((n - 8) // 3) + [star(3), star(3)])


def build_f2_extremal(n: int) -> list[Graph]:
    """All forests of order ``n >= 7`` attaining the forest second maximum
    (two classes when ``n = 2 (mod 3)``, otherwise one)."""
    if n < 7:
        raise GraphError(
            f"second-maximum extremal forests are characterised only for n >= 7, got {n}"
        )
    if n == 9:
        return [disjoint_union([star(3), star(4)])]
    r = n % 3
    if r == 1:
        return [disjoint_union([path(3)] * ((n - 7) // 3) + [build_t_star(7)])]
    if r == 2:
        return [
            disjoint_union([path(3)] * ((n - 8) // 3) + [build_t_star_8()]),
            disjoint_union([path(3)] * ((n - 5) // 3) + [star(4)]),
        ]
    return [disjoint_union([path(3)] * ((n - 12) // 3) + [star(3)] * 3)]


def _hub_tree(plain_arms: int, subdivided_arms: int) -> Graph:
    """Hub whose arms are cherries; ``subdivided_arms`` of them are reached
    through one extra middle vertex."""
    edges = []
    nxt = 1
    for _ in range(subdivided_arms):
        mid, center = nxt, nxt + 1
        edges += [(0, mid), (mid, center), (center, center + 1), (center, center + 2)]
        nxt += 4
    for _ in range(plain_arms):
        center = nxt
        edges += [(0, center), (center, center + 1), (center, center + 2)]
        nxt += 3
    return make_graph(nxt, edges)


def _double_hub_tree_14() -> Graph:
    """Two adjacent degree-3 hubs, each carrying two cherry arms."""
    edges = [(0, 1)]
    nxt = 2
    for hub in (0, 1):
        for _ in range(2):
            c = nxt
            edges += [(hub, c), (c, c + 1), (c, c + 2)]
            nxt += 3
    return make_graph(14, edges)


def build_conjecture_tree(n: int) -> list[Graph]:
    """The conjectured maximum trees of order ``n >= 7``.

    For ``n = 1 (mod 3)`` this is the plain t-star; for ``n = 2`` the hub has
    one subdivided arm and for ``n = 0`` two subdivided arms, the remaining
    arms being plain cherries.  At ``n = 14`` a second, non-isomorphic
    extremal tree exists (two adjacent hubs with two cherries each).
    """
    if n < 7:
        raise GraphError(f"conjecture trees are defined for n >= 7, got {n}")
    r = n % 3
    if r == 1:
        out = [build_t_star(n)]
    elif r == 2:
        out = [_hub_tree((n - 5) // 3, 1)]
    else:
        out = [_hub_tree((n - 9) // 3, 2)]
    if n == 14:
        out.append(_double_hub_tree_14())
    return out


# ---------------------------------------------------------------------------
# rewiring transformations
# ---------------------------------------------------------------------------

def _replace_edge(g: Graph, drop: tuple[int, int], add: tuple[int, int]) -> Graph:
    drop = (min(drop), max(drop))
    edges = [e for e in edge_list(g) if e != drop]
    edges.append(add)
    return make_graph(g.n, edges)


def lemma1_transform(g: Graph, u: int, v: int, x: int) -> Graph:
    """Re-hang the leaf ``u`` from its degree-2 support ``v`` onto ``v``'s
    non-leaf neighbour ``x``; never decreases the count of maximal
    dissociation sets."""
    if not is_tree(g):
        raise GraphError("transformation requires a tree")
    if degree(g, v) != 2:
        raise GraphError(f"v={v} must be a support vertex of degree 2")
    if u not in g.adj[v]:
        raise GraphError(f"u={u} must be adjacent to v={v}")
    if degree(g, u) != 1:
        raise GraphError(f"u={u} must be a leaf")
    if x not in g.adj[v] or x == u:
        raise GraphError(f"x={x} must be the other neighbour of v={v}")
    if degree(g, x) < 2:
        raise GraphError(f"x={x} must not be a leaf")
    return _replace_edge(g, (u, v), (min(u, x), max(u, x)))


def lemma2_transform(g: Graph, x: int, t: int, y: int) -> Graph:
    """Detach the star around ``x`` (at least two leaves plus the single
    non-leaf neighbour ``t``) and re-attach it at ``t``'s leaf ``y``."""
    if not is_tree(g):
        raise GraphError("transformation requires a tree")
    if degree(g, x) < 3:
        raise GraphError(f"x={x} must have degree at least 3")
    if t not in g.adj[x]:
        raise GraphError(f"t={t} must be adjacent to x={x}")
    non_leaf = [w for w in g.adj[x] if degree(g, w) > 1]
    if non_leaf != [t]:
        raise GraphError(
            f"x={x} must be adjacent to exactly one non-leaf vertex, namely t={t}"
        )
    if y not in g.adj[t] or degree(g, y) != 1:
        raise GraphError(f"y={y} must be a leaf adjacent to t={t}")
    return _replace_edge(g, (x, t), (min(x, y), max(x, y)))


def lemma3_delete_leaf(g: Graph, v: int, u: int) -> Graph:
    """Delete the leaf ``u`` from a vertex ``v`` carrying at least three
    leaves (vertices above ``u`` shift down by one)."""
    from .graph import delete_vertex

    leaf_nbrs = [w for w in g.adj[v] if degree(g, w) == 1]
    if len(leaf_nbrs) < 3:
        raise GraphError(f"v={v} must be adjacent to at least three leaves")
    if u not in leaf_nbrs:
        raise GraphError(f"u={u} must be a leaf adjacent to v={v}")
    return delete_vertex(g, u)
