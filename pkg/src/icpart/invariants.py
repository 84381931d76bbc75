"""Domination and colouring invariants: alpha, gamma_i, chi and id.

Every routine is exact and exponential in the worst case; they are meant
for graphs of desk-scale order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, VertexSet, girth, iter_bits


def dominated(g: Graph, s: VertexSet) -> VertexSet:
    """Union of the closed neighbourhoods of the vertices in ``s``."""
    cover = s
    adj = g.adj
    for v in iter_bits(s):
        cover |= adj[v]
    return cover


def is_dominating(g: Graph, s: VertexSet) -> bool:
    return dominated(g, s) == g.vertices


def is_independent(g: Graph, s: VertexSet) -> bool:
    adj = g.adj
    for v in iter_bits(s):
        if adj[v] & s:
            return False
    return True


def is_independent_dominating(g: Graph, s: VertexSet) -> bool:
    return is_independent(g, s) and is_dominating(g, s)


def independence_number(g: Graph) -> int:
    best = 0
    adj = g.adj

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        v = (cand & -cand).bit_length() - 1
        grow(size + 1, cand & ~adj[v] & ~(1 << v))
        # skipping v only helps when some neighbour of v is still available
        if adj[v] & cand:
            grow(size, cand & ~(1 << v))

    grow(0, g.vertices)
    return best


def independent_domination_number(g: Graph) -> Optional[int]:
    """Smallest independent dominating set, searched by increasing size.

    For an edgeless graph the answer is ``n``.  Only the order-0 graph
    returns ``None``; every other simple graph has a maximal independent set.
    """
    if g.n == 0:
        return None
    full = g.vertices
    adj = g.adj

    def search(k: int, chosen: int, cover: int, cand: int) -> bool:
        if k == 0:
            return cover == full
        for v in iter_bits(cand):
            above = cand >> (v + 1) << (v + 1)
            if search(k - 1, chosen | (1 << v), cover | adj[v] | (1 << v), above & ~adj[v]):
                return True
        return False

    for k in range(1, g.n + 1):
        if search(k, 0, 0, full):
            return k
    return None  # unreachable for n >= 1


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """All maximal independent sets (Bron-Kerbosch with pivoting on the complement).

    A set is maximal independent exactly when it is independent dominating,
    so this is also the list of independent dominating sets.  Sorted by
    their ascending vertex lists.
    """
    if g.n == 0:
        return []
    full = g.vertices
    # non-neighbours of v, excluding v itself
    non = [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)]
    found: list[VertexSet] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: (non[u] & p).bit_count())
        for v in iter_bits(p & ~non[pivot]):
            expand(r | (1 << v), p & non[v], x & non[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return sorted(found, key=lambda m: [v for v in iter_bits(m)])


def enumerate_independent_dominating_sets(g: Graph) -> list[VertexSet]:
    return maximal_independent_sets(g)


def _clique_lower_bound(g: Graph) -> int:
    best = 0
    adj = g.adj

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        v = (cand & -cand).bit_length() - 1
        grow(size + 1, cand & adj[v])
        grow(size, cand & ~(1 << v))

    grow(0, g.vertices)
    return best


def _colorable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color = [-1] * g.n
    adj = g.adj

    def place(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        forbidden = {color[u] for u in iter_bits(adj[v]) if color[u] >= 0}
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = max(1, _clique_lower_bound(g))
    while not _colorable(g, k):
        k += 1
    return k


def idomatic_partition(g: Graph) -> Optional[list[VertexSet]]:
    """A largest partition of V into independent dominating sets, or ``None``."""
    if g.n == 0:
        return None
    sets = maximal_independent_sets(g)
    full = g.vertices
    by_low: dict[int, list[VertexSet]] = {}
    for s in sets:
        for v in iter_bits(s):
            by_low.setdefault(v, []).append(s)
    best: list[VertexSet] = []
    chosen: list[VertexSet] = []

    def cover(covered: int) -> None:
        nonlocal best
        if covered == full:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        rest = full & ~covered
        # each further class holds at least one remaining vertex
        if len(chosen) + rest.bit_count() <= len(best):
            return
        v = (rest & -rest).bit_length() - 1
        for s in by_low.get(v, ()):
            if s & covered:
                continue
            chosen.append(s)
            cover(covered | s)
            chosen.pop()

    cover(0)
    return best or None


def idomatic_number(g: Graph) -> Optional[int]:
    part = idomatic_partition(g)
    return None if part is None else len(part)


@dataclass(frozen=True)
class InvariantReport:
    alpha: int
    gamma_i: Optional[int]
    chi: int
    idomatic: Optional[int]
    girth: Optional[int]


def invariant_report(g: Graph) -> InvariantReport:
    return InvariantReport(
        alpha=independence_number(g),
        gamma_i=independent_domination_number(g),
        chi=chromatic_number(g),
        idomatic=idomatic_number(g),
        girth=girth(g),
    )
