"""Small-graph core: bitset-adjacency graphs, dissociation-set predicates,
structural queries, and canonical codes for forests.

Vertices are the integers ``0..n-1`` with ``n <= 64``.  Vertex sets are plain
Python ints interpreted as bitmasks, so set algebra is ``&``/``|``/``~`` on
ints and membership is ``mask >> v & 1``.  All types are immutable after
construction and every function here is pure.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Malformed construction or violated structural precondition."""


class Graph:
    """Immutable simple undirected graph with dual adjacency representation.

    ``adj[v]`` is a sorted tuple of neighbours and ``adj_bits[v]`` is the same
    neighbourhood as a bitmask; the two are kept consistent by construction.
    Use :func:`make_graph` to build instances.
    """

    __slots__ = ("n", "adj", "adj_bits")

    def __init__(self, n: int, adj: tuple, adj_bits: tuple):
        self.n = n
        self.adj = adj
        self.adj_bits = adj_bits

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        m = sum(len(a) for a in self.adj) // 2
        return f"Graph(n={self.n}, m={m})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices ``0..n-1`` from an edge list.

    Duplicate edges are collapsed; self-loops and out-of-range endpoints
    raise :class:`GraphError`.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    adj_bits = tuple(sum(1 << w for w in a) for a in adj)
    return Graph(n, adj, adj_bits)


# ---------------------------------------------------------------------------
# vertex-set helpers
# ---------------------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Unpack a bitmask into the ascending list of its vertices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def edge_list(g: Graph) -> list[tuple[int, int]]:
    """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
    return [(u, v) for u in range(g.n) for v in g.adj[u] if u < v]


# ---------------------------------------------------------------------------
# dissociation-set predicates
# ---------------------------------------------------------------------------

def is_dissociation_set(g: Graph, s: int) -> bool:
    """True iff every vertex of ``s`` has at most one neighbour inside ``s``."""
    _check_mask(g, s)
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        d = g.adj_bits[low.bit_length() - 1] & s
        if d & (d - 1):
            return False
    return True


def is_maximal_dissociation_set(g: Graph, s: int) -> bool:
    """True iff ``s`` is a dissociation set and no single vertex can be added.

    A vertex ``u`` outside ``s`` can be added exactly when it has no
    neighbour in ``s``, or a single neighbour that is itself unpaired
    within ``s``.
    """
    if not is_dissociation_set(g, s):
        return False
    sat = 0  # members of s that already have a neighbour inside s
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        if g.adj_bits[v] & s:
            sat |= low
    outside = ((1 << g.n) - 1) & ~s
    while outside:
        low = outside & -outside
        outside ^= low
        d = g.adj_bits[low.bit_length() - 1] & s
        if d == 0:
            return False
        if d & (d - 1):
            continue
        if not d & sat:
            return False
    return True


def _check_mask(g: Graph, mask: int) -> None:
    if mask < 0 or mask >> g.n:
        raise GraphError(f"vertex set {bin(mask)} not contained in 0..{g.n - 1}")


# ---------------------------------------------------------------------------
# structural queries
# ---------------------------------------------------------------------------

def degree(g: Graph, v: int) -> int:
    return len(g.adj[v])


def leaves(g: Graph) -> list[int]:
    """Vertices of degree exactly 1."""
    return [v for v in range(g.n) if len(g.adj[v]) == 1]


def support_vertices(g: Graph) -> list[int]:
    """Vertices adjacent to at least one leaf."""
    leaf = [len(a) == 1 for a in g.adj]
    return [v for v in range(g.n) if any(leaf[w] for w in g.adj[v])]


def components(g: Graph) -> list[list[int]]:
    """Vertex partition into connected components, each sorted, ordered by
    smallest member."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_forest(g: Graph) -> bool:
    m = sum(len(a) for a in g.adj) // 2
    return m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    m = sum(len(a) for a in g.adj) // 2
    return m == g.n - 1 and len(components(g)) == 1


def _farthest(g: Graph, src: int) -> tuple[int, int]:
    """(vertex, distance) of a farthest vertex from ``src`` in its component."""
    dist = {src: 0}
    queue = deque([src])
    far, fd = src, 0
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                if dist[w] > fd:
                    far, fd = w, dist[w]
                queue.append(w)
    return far, fd


def diameter(g: Graph) -> int:
    """Length in edges of a longest path; forests only (max over components)."""
    if not is_forest(g):
        raise GraphError("diameter is implemented for forests only")
    best = 0
    for comp in components(g):
        a, _ = _farthest(g, comp[0])
        _, d = _farthest(g, a)
        best = max(best, d)
    return best


# ---------------------------------------------------------------------------
# canonical codes for forests
# ---------------------------------------------------------------------------

def _component_centers(g: Graph, comp: Sequence[int]) -> list[int]:
    """Center vertex/vertices of one tree component, by leaf peeling."""
    if len(comp) <= 2:
        return list(comp)
    deg = {v: len(g.adj[v]) for v in comp}
    layer = [v for v in comp if deg[v] == 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            deg[u] = 0
            for w in g.adj[u]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Graph, root: int, parent: int) -> bytes:
    kids = sorted(_rooted_code(g, w, root) for w in g.adj[root] if w != parent)
    return b"\x01" + b"".join(kids) + b"\x00"


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant code of a forest.

    Each component is encoded relative to its center (for bicentral trees the
    lexicographically smaller of the two rootings is kept); component codes
    are sorted and concatenated.  Two forests get equal codes iff they are
    isomorphic.
    """
    if not is_forest(g):
        raise GraphError("canonical_code requires an acyclic graph")
    codes = []
    for comp in components(g):
        centers = _component_centers(g, comp)
        codes.append(min(_rooted_code(g, c, -1) for c in centers))
    codes.sort()
    return b"".join(codes)


# ---------------------------------------------------------------------------
# graph surgery
# ---------------------------------------------------------------------------

def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices; ``perm[old] = new``. Must be a permutation of 0..n-1."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex range")
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in edge_list(g)])


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex ``v``; vertices above ``v`` shift down by one."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    if g.n == 1:
        raise GraphError("cannot delete the only vertex")

    def relabel(w: int) -> int:
        return w - 1 if w > v else w

    edges = [(relabel(a), relabel(b)) for a, b in edge_list(g) if v not in (a, b)]
    return make_graph(g.n - 1, edges)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union; vertex blocks follow the given order."""
    if not graphs:
        raise GraphError("disjoint_union requires at least one graph")
    edges = []
    off = 0
    for g in graphs:
        edges.extend((a + off, b + off) for a, b in edge_list(g))
        off += g.n
    return make_graph(off, edges)


# ---------------------------------------------------------------------------
# text formats: edge list and graph6
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    First significant line is ``n m``; the following ``m`` lines each carry
    one edge ``u v`` (0-indexed).  Blank lines and ``#`` comments are skipped.
    Errors report 1-based line numbers.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphError("empty graph input")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise GraphError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers in header 'n m'") from None
    if len(rows) - 1 != m:
        raise GraphError(f"line {lineno}: header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected edge 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected integer endpoints") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    return make_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = edge_list(g)
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines)


_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one standard graph6 line (header prefix tolerated)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise GraphError("invalid graph6 character")
    if data[0] < 63:
        n, i = data[0], 1
    else:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("unsupported graph6 size encoding")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        i = 4
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    if n == 0:
        raise GraphError("graph6 order 0 not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - i != need:
        raise GraphError(f"graph6 payload length mismatch for n={n}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (data[i + k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    return make_graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as one standard graph6 line (no header)."""
    n = g.n
    if n <= 62:
        head = [n]
    else:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    bits = []
    for v in range(1, n):
        row = g.adj_bits[v]
        for u in range(v):
            bits.append((row >> u) & 1)
    while len(bits) % 6:
        bits.append(0)
    payload = [
        (bits[i] << 5) | (bits[i + 1] << 4) | (bits[i + 2] << 3)
        | (bits[i + 3] << 2) | (bits[i + 4] << 1) | bits[i + 5]
        for i in range(0, len(bits), 6)
    ]
    return "".join(chr(63 + x) for x in head + payload)


def load_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse a graph from text, auto-detecting the format when ``fmt`` is None.

    A first significant line that starts with a digit and splits into exactly
    two tokens selects the edge-list format; anything else is read as graph6.
    """
    if fmt not in (None, "edges", "graph6"):
        raise GraphError(f"unknown graph format {fmt!r}")
    first = ""
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            first = line
            break
    if not first:
        raise GraphError("empty graph input")
    if fmt is None:
        fmt = "edges" if first[0].isdigit() and len(first.split()) == 2 else "graph6"
    if fmt == "edges":
        return parse_edge_list(text)
    return parse_graph6(first)
