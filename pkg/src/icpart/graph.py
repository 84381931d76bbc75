"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit mask per vertex, so vertex sets are
plain ``int`` masks throughout the package (bit ``v`` set means vertex ``v``
is a member).  Vertices are 0-indexed; a construction written with labels
v1..vn uses 0..n-1.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_ORDER = 64

VertexSet = int


class CapacityError(ValueError):
    """Raised when a construction would exceed ``MAX_ORDER`` vertices."""


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the open neighbourhood of ``v``.

    The constructor trusts its arguments.  Use :func:`build` for edge lists
    from outside, or :meth:`check` to validate a hand-made adjacency tuple.
    """

    n: int
    adj: tuple[int, ...]

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def closed(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def check(self) -> "Graph":
        if not 0 <= self.n <= MAX_ORDER:
            raise CapacityError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = self.vertices
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(a):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        return self

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph of order ``n`` from an edge list; duplicate edges collapse."""
    if not 0 <= n <= MAX_ORDER:
        raise CapacityError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; ``h`` is relabelled to ``g.n .. g.n + h.n - 1``."""
    if g.n + h.n > MAX_ORDER:
        raise CapacityError(f"combined order {g.n + h.n} exceeds {MAX_ORDER}")
    return Graph(g.n + h.n, g.adj + tuple(a << g.n for a in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between ``g`` and ``h``."""
    u = union(g, h)
    left, right = g.vertices, h.vertices << g.n
    adj = tuple(a | (right if v < g.n else left) for v, a in enumerate(u.adj))
    return Graph(u.n, adj)


def induced(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, relabelled in ascending original order."""
    keep = members(s & g.vertices)
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(vertex_set(index[u] for u in iter_bits(g.adj[v] & s)))
    return Graph(len(keep), tuple(adj))


def remove_vertices(g: Graph, s: VertexSet) -> Graph:
    return induced(g, g.vertices & ~s)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return min((a.bit_count() for a in g.adj), default=0)


def max_degree(g: Graph) -> int:
    return max((a.bit_count() for a in g.adj), default=0)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((a.bit_count() for a in g.adj), reverse=True))


def components(g: Graph) -> list[VertexSet]:
    """Connected components as masks, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= g.adj[u]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    # the empty graph counts as disconnected, K1 as connected
    return g.n > 0 and len(components(g)) == 1


def full_vertices(g: Graph) -> VertexSet:
    target = g.n - 1
    return vertex_set(v for v, a in enumerate(g.adj) if a.bit_count() == target)


def isolated_vertices(g: Graph) -> VertexSet:
    return vertex_set(v for v, a in enumerate(g.adj) if a == 0)


def edge_set_between(g: Graph, x: VertexSet, y: VertexSet) -> str:
    """Classify ``[x, y]`` as ``"empty"``, ``"full"`` or ``"mixed"``.

    When either side is empty there are no edges, which is reported as
    ``"empty"``.
    """
    if x & y:
        raise ValueError("vertex sets overlap")
    if not x or not y:
        return "empty"
    hits = [(g.adj[v] & y).bit_count() for v in iter_bits(x)]
    if not any(hits):
        return "empty"
    if all(h == y.bit_count() for h in hits):
        return "full"
    return "mixed"


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        a = g.adj[u]
        for v in iter_bits(a >> (u + 1) << (u + 1)):
            if a & g.adj[v]:
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> Optional[list[int]]:
    """A proper 2-colouring (list of 0/1 per vertex), or ``None``."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, ``None`` for forests."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def _refine(graphs: list[Graph], rounds: int = 4) -> list[list[int]]:
    """Colour refinement run jointly so colour ids are comparable across graphs."""
    colors = [[a.bit_count() for a in g.adj] for g in graphs]
    for _ in range(rounds):
        palette: dict[tuple, int] = {}
        new = []
        for g, col in zip(graphs, colors):
            sig = [(col[v], tuple(sorted(col[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]
            new.append(sig)
        for key in sorted({s for sig in new for s in sig}):
            palette[key] = len(palette)
        refined = [[palette[s] for s in sig] for sig in new]
        if all(len(set(r)) == len(set(c)) for r, c in zip(refined, colors)):
            return refined
        colors = refined
    return colors


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with colour-refinement pruning.

    Intended for small orders (up to about a dozen vertices); mismatched
    orders simply return ``False``.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    cg, ch = _refine([g, h])
    if Counter(cg) != Counter(ch):
        return False
    n = g.n
    # place rare colours first, then stay adjacent to what is already placed
    freq = Counter(cg)
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = min(remaining, key=lambda x: (-(g.adj[x] & placed).bit_count(), freq[cg[x]], x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(ch[w], []).append(w)
    mapping = [-1] * n

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color[cg[v]]:
            if used >> w & 1:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                if extend(i + 1, used | (1 << w)):
                    return True
        mapping[v] = -1
        return False

    return extend(0, 0)


def invariant_key(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint used to bucket graphs before pairwise tests."""
    (colors,) = _refine([g])
    return (g.n, g.edge_count, degree_sequence(g), tuple(sorted(colors)), girth(g))
