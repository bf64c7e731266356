"""Linear-time counting of maximal dissociation sets on trees and forests.

The count is a rooted dynamic programme.  For the subtree hanging off a
vertex ``v`` we count partial vertex sets by the state of ``v``:

* ``in_free``    -- ``v`` in the set, unpaired, no pending obligation;
* ``in_need``    -- ``v`` in the set, unpaired, but some excluded child can
  still be added unless ``v`` ends up paired, which at this point only the
  parent can do by joining the set;
* ``in_paired``  -- ``v`` in the set, already paired with a child;
* ``out_blocked``-- ``v`` excluded and already unaddable (two set neighbours,
  or one set neighbour that is itself paired);
* ``out_free0``  -- ``v`` excluded, no child in the set; only a parent that
  joins the set *and* ends up paired can block ``v``;
* ``out_free1``  -- ``v`` excluded, exactly one child in the set and that
  child unpaired; only a parent in the set can block ``v``.

Membership of adjacent vertices pairs them automatically, so transitions are
forced rather than chosen: a set child of a set vertex consumes its single
pairing slot.  At the root the surviving states are ``in_free``,
``in_paired`` and ``out_blocked``; their total is the number of maximal
dissociation sets of the tree.  Counts are exact Python integers.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, GraphError, components, is_forest, is_tree


def _count_component(g: Graph, root: int) -> int:
    parent = {root: -1}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)

    # per-vertex state tuple (in_free, in_need, in_paired,
    #                         out_blocked, out_free0, out_free1)
    state: dict[int, tuple[int, int, int, int, int, int]] = {}
    for v in reversed(order):
        in_free, in_need, in_paired = 1, 0, 0
        out_blocked, out_free0, out_free1 = 0, 1, 0
        for w in g.adj[v]:
            if w == parent[v]:
                continue
            f_i, f_n, p, b, z0, z1 = state.pop(w)
            # v in the set: a set child pairs with v; out_free0 children
            # leave an obligation to pair; in_paired children are impossible.
            joins, neutral, obliges = f_i + f_n, b + z1, z0
            in_paired, in_need, in_free = (
                in_paired * (neutral + obliges) + (in_free + in_need) * joins,
                in_need * (neutral + obliges) + in_free * obliges,
                in_free * neutral,
            )
            # v excluded: children must be in_free, in_paired or out_blocked.
            out_blocked, out_free1, out_free0 = (
                out_blocked * (f_i + p + b) + out_free1 * (f_i + p) + out_free0 * p,
                out_free1 * b + out_free0 * f_i,
                out_free0 * b,
            )
        state[v] = (in_free, in_need, in_paired, out_blocked, out_free0, out_free1)

    in_free, _, in_paired, out_blocked, _, _ = state[root]
    return in_free + in_paired + out_blocked


def count_mds_tree(g: Graph, root: int | None = None) -> int:
    """Number of maximal dissociation sets of a tree.

    ``root`` only picks the DP orientation; the count is root-independent.
    """
    if not is_tree(g):
        raise GraphError("count_mds_tree requires a connected acyclic graph")
    if root is None:
        root = 0
    elif not 0 <= root < g.n:
        raise GraphError(f"root {root} out of range")
    return _count_component(g, root)


def count_mds_forest(g: Graph) -> int:
    """Number of maximal dissociation sets of a forest.

    Maximality factorises over components, so this is the product of the
    per-component counts.
    """
    if not is_forest(g):
        raise GraphError("count_mds_forest requires an acyclic graph")
    total = 1
    for comp in components(g):
        total *= _count_component(g, comp[0])
    return total
