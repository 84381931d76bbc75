"""Exhaustive small-graph and tree enumeration."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph, are_isomorphic, invariant_key, is_connected, is_triangle_free

MAX_ENUM_ORDER = 7
MAX_TREE_ORDER = 10


def _check_order(n: int) -> None:
    if not 0 <= n <= MAX_ENUM_ORDER:
        raise ValueError(
            f"exhaustive enumeration supports order <= {MAX_ENUM_ORDER}; "
            "feed larger graphs in as a graph6 stream instead"
        )


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``0..n-1`` (2^(n(n-1)/2) of them)."""
    _check_order(n)
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if code >> bit & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def _dedup(candidates) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for g in candidates:
        bucket = buckets.setdefault(invariant_key(g), [])
        if any(are_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps


@lru_cache(maxsize=None)
def _representatives(n: int, triangle_free: bool) -> tuple[Graph, ...]:
    # every graph on n vertices is a graph on n-1 vertices plus one vertex,
    # and triangle-freeness is inherited by induced subgraphs
    if n == 0:
        return (Graph(0, ()),)
    candidates = []
    for base in _representatives(n - 1, triangle_free):
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj)
            for u in range(n - 1):
                if nbrs >> u & 1:
                    adj[u] |= 1 << (n - 1)
            g = Graph(n, tuple(adj) + (nbrs,))
            if triangle_free and not is_triangle_free(g):
                continue
            candidates.append(g)
    return tuple(_dedup(candidates))


def enumerate_graphs(
    n: int,
    connected: bool = False,
    triangle_free: bool = False,
    up_to_isomorphism: bool = False,
) -> Iterator[Graph]:
    """Graphs of order ``n`` (at most 7) passing the filters.

    With ``up_to_isomorphism`` one representative per isomorphism class is
    produced, otherwise every labelled graph.
    """
    _check_order(n)
    source = _representatives(n, triangle_free) if up_to_isomorphism else labeled_graphs(n)
    for g in source:
        if connected and not is_connected(g):
            continue
        if triangle_free and not up_to_isomorphism and not is_triangle_free(g):
            continue
        yield g


def census(max_order: int, **filters) -> list[Graph]:
    """Isomorphism-class representatives for every order ``1..max_order``."""
    out: list[Graph] = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_graphs(n, up_to_isomorphism=True, **filters))
    return out


def tree_signature(g: Graph) -> str:
    """Canonical string of a tree: smallest AHU encoding over its centres."""
    n = g.n
    if n == 0:
        return ""
    degree = [g.degree(v) for v in range(n)]
    remaining = n
    layer = [v for v in range(n) if degree[v] <= 1]
    removed = [False] * n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed[v] = True
            for u in g.neighbors(v):
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centres = [v for v in range(n) if not removed[v]]

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(u, v) for u in g.neighbors(v) if u != parent)) + ")"

    return min(encode(c, -1) for c in centres)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: set[str] = set()
    out = []
    for base in _trees(n - 1):
        for attach in range(n - 1):
            adj = list(base.adj) + [1 << attach]
            adj[attach] |= 1 << (n - 1)
            t = Graph(n, tuple(adj))
            sig = tree_signature(t)
            if sig not in seen:
                seen.add(sig)
                out.append(t)
    return tuple(out)


def enumerate_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class of order ``n`` (1..10)."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}")
    return list(_trees(n))
