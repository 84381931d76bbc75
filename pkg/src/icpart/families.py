"""Named graph families, their closed-form IC values and witness partitions.

Labelling conventions (0-indexed):

* ``path(n)``, ``cycle(n)``: ``v1..vn`` are ``0..n-1`` along the path/cycle.
* ``star(n)``: centre ``0``, leaves ``1..n-1``.
* ``doublestar(p, q)``: supports ``0`` and ``1``; the ``p`` leaves of ``0``
  follow, then the ``q`` leaves of ``1``.
* ``multipartite(sizes)``: parts are consecutive blocks in the given order.
* ``familyB(n)``: clique ``v1..vn`` is ``0..n-1``; ``v_{n+1} = n`` is
  adjacent to ``v_n`` and ``v_{n-1}``; ``v_{n+2} = n+1`` to ``v_n`` only.
* ``deltasharp(n)``: clique ``0..n-1``, then ``a = n`` and ``b = n+1`` with
  edges ``a-b`` and ``b-v1``.
* ``K0``: ``v1..v4 = 0..3``, ``u1..u4 = 4..7``; ``v_i ~ u_j`` iff ``i != j``.
* ``familyK(k)``: ``K0`` on ``0..7``, then ``n1..nk`` and ``m1..mk``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .coalition import NO_PARTITION, ICResult, Partition
from .graph import (
    MAX_ORDER,
    CapacityError,
    Graph,
    are_isomorphic,
    build,
    complement,
    components,
    degree_sequence,
    induced,
    is_connected,
    is_bipartite,
    isolated_vertices,
    iter_bits,
    max_degree,
    min_degree,
    two_coloring,
    vertex_set,
)
from .invariants import chromatic_number, idomatic_number, independence_number

_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "empty": 1,
    "star": 1,
    "doublestar": 2,
    "multipartite": None,
    "familyB": 1,
    "deltasharp": 1,
    "K0": 0,
    "familyK": 1,
}

_MINIMUM = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "empty": 1,
    "star": 1,
    "doublestar": 1,
    "multipartite": 1,
    "familyB": 4,
    "deltasharp": 2,
    "familyK": 1,
}

_ALIASES = {name.lower(): name for name in _ARITY}
_ALIASES.update({"k_0": "K0", "familyb": "familyB", "familyk": "familyK", "double-star": "doublestar"})


@dataclass(frozen=True)
class FamilySpec:
    """A named family member such as ``FamilySpec("path", (9,))``."""

    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in _ARITY:
            raise ValueError(f"unknown family {self.name!r}")
        arity = _ARITY[self.name]
        if arity is None:
            if not self.params:
                raise ValueError(f"{self.name} needs at least one part size")
        elif len(self.params) != arity:
            raise ValueError(f"{self.name} takes {arity} parameter(s), got {len(self.params)}")
        low = _MINIMUM.get(self.name)
        if low is not None and any(p < low for p in self.params):
            raise ValueError(f"{self.name} parameters must be >= {low}, got {list(self.params)}")
        if self.order > MAX_ORDER:
            raise CapacityError(f"{self} has order {self.order} > {MAX_ORDER}")

    @property
    def order(self) -> int:
        p = self.params
        return {
            "doublestar": lambda: p[0] + p[1] + 2,
            "multipartite": lambda: sum(p),
            "familyB": lambda: p[0] + 2,
            "deltasharp": lambda: p[0] + 2,
            "K0": lambda: 8,
            "familyK": lambda: 8 + 2 * p[0],
        }.get(self.name, lambda: p[0])()

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(map(str, self.params))}"


def parse_family(text: str) -> FamilySpec:
    """Parse ``<name>[:<param>[,<param>...]]``, e.g. ``path:9`` or ``multipartite:1,2,3``."""
    name, _, rest = text.strip().partition(":")
    key = _ALIASES.get(name.strip().lower())
    if key is None:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(_ARITY)}")
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip()) if rest else ()
    except ValueError:
        raise ValueError(f"family parameters must be integers: {rest!r}") from None
    return FamilySpec(key, params)


def is_family_text(text: str) -> bool:
    name = text.strip().partition(":")[0].strip().lower()
    return name in _ALIASES


def _path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def _complete_edges(vertices) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def _k0_edges() -> list[tuple[int, int]]:
    return [(i, 4 + j) for i in range(4) for j in range(4) if i != j]


def generate(spec: FamilySpec) -> Graph:
    p = spec.params
    name = spec.name
    if name == "path":
        return _path(p[0])
    if name == "cycle":
        return _cycle(p[0])
    if name == "complete":
        return build(p[0], _complete_edges(range(p[0])))
    if name == "empty":
        return build(p[0], [])
    if name == "star":
        return build(p[0], [(0, v) for v in range(1, p[0])])
    if name == "doublestar":
        a, b = p
        edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + i) for i in range(b)]
        return build(a + b + 2, edges)
    if name == "multipartite":
        part = [i for i, size in enumerate(p) for _ in range(size)]
        n = len(part)
        return build(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])
    if name == "familyB":
        n = p[0]
        edges = _complete_edges(range(n)) + [(n, n - 1), (n, n - 2), (n + 1, n - 1)]
        return build(n + 2, edges)
    if name == "deltasharp":
        n = p[0]
        return build(n + 2, _complete_edges(range(n)) + [(n, n + 1), (n + 1, 0)])
    if name == "K0":
        return build(8, _k0_edges())
    if name == "familyK":
        k = p[0]
        ns = range(8, 8 + k)
        ms = range(8 + k, 8 + 2 * k)
        edges = _k0_edges()
        edges += [(v, x) for v in range(4) for x in ns]
        edges += [(u, y) for u in range(4, 8) for y in ms]
        edges += [(8 + i, 8 + k + j) for i in range(k) for j in range(k) if i != j]
        return build(8 + 2 * k, edges)
    raise ValueError(f"unknown family {name!r}")  # pragma: no cover


def formula_ic(spec: FamilySpec) -> ICResult:
    """Closed-form IC for the family member (no witness attached)."""
    p = spec.params
    name = spec.name
    if name == "path":
        n = p[0]
        value = n if n <= 4 else 4 if n == 5 else 5 if n <= 9 else 6
    elif name == "cycle":
        n = p[0]
        value = n if n <= 6 else 5 if n == 7 else 6
    elif name == "complete":
        value = p[0]
    elif name == "empty":
        value = 1 if p[0] == 1 else 2
    elif name == "star":
        value = p[0] if p[0] <= 2 else 3
    elif name == "doublestar":
        value = 4
    elif name == "multipartite":
        value = 2 * len(p) - sum(1 for s in p if s == 1)
    elif name == "familyB":
        return NO_PARTITION
    elif name == "deltasharp":
        value = p[0] + 2
    elif name == "K0":
        value = 8
    else:
        value = 8 + 2 * p[0]
    return ICResult(value)


def _singletons(n: int) -> Partition:
    return Partition(tuple(1 << v for v in range(n)))


def _one_based(*classes) -> Partition:
    return Partition(tuple(vertex_set(v - 1 for v in c) for c in classes))


def _split_first(block: list[int]) -> list[int]:
    """Split a vertex block into its first vertex and the rest (as masks)."""
    if len(block) == 1:
        return [1 << block[0]]
    return [1 << block[0], vertex_set(block[1:])]


def _long_path_classes(n: int) -> Partition:
    # shared by paths with n >= 10 and even cycles with n >= 8
    odd = [1, 6] + [v for v in range(9, n + 1, 2)]
    even = [2, 5] + [v for v in range(10, n + 1, 2)]
    return _one_based(odd, even, [3], [4], [7], [8])


def _cycle_witness(n: int) -> Partition:
    if n <= 6:
        return _singletons(n)
    if n == 7:
        return _one_based([1, 3], [5], [6], [4, 7], [2])
    if n % 2 == 0:
        return _long_path_classes(n)
    if n % 3 == 0:
        classes = []
        for r in (1, 2, 3):
            classes += _split_first([v - 1 for v in range(r, n + 1, 3)])
        return Partition(tuple(classes))
    if n % 6 == 5:
        k = (n + 1) // 6
        return _one_based(
            [3 * i + 1 for i in range(k)],
            [3 * i + 1 for i in range(k, 2 * k)],
            [3 * i for i in range(k, 2 * k)],
            [3 * i - 1 for i in range(k, 2 * k + 1)],
            [3 * i - 1 for i in range(1, k)],
            [3 * i for i in range(1, k)],
        )
    k = (n - 1) // 6
    return _one_based(
        [3 * i + 1 for i in range(k + 1)] + [3 * k + 3],
        [3 * i for i in range(k + 2, 2 * k + 1)],
        [3 * i - 1 for i in range(k + 2, 2 * k + 1)],
        [3 * i + 1 for i in range(k + 1, 2 * k + 1)] + [3 * k + 2],
        [3 * i - 1 for i in range(1, k + 1)],
        [3 * i for i in range(1, k + 1)],
    )


def _path_witness(n: int) -> Partition:
    if n <= 4:
        return _singletons(n)
    table = {
        5: ([1, 3], [2], [4], [5]),
        6: ([1, 6], [2], [3], [4], [5]),
        7: ([1, 6], [2, 7], [3], [4], [5]),
        8: ([1, 3, 6], [2, 7], [8], [4], [5]),
        9: ([1, 3, 5], [2, 4, 9], [6], [7], [8]),
    }
    if n in table:
        return _one_based(*table[n])
    return _long_path_classes(n)


def witness_partition(spec: FamilySpec) -> Optional[Partition]:
    """An ic-partition attaining ``formula_ic(spec)``; ``None`` for familyB."""
    p = spec.params
    name = spec.name
    if name == "path":
        return _path_witness(p[0])
    if name == "cycle":
        return _cycle_witness(p[0])
    if name in ("complete", "deltasharp", "K0", "familyK"):
        return _singletons(spec.order)
    if name == "empty":
        return Partition(tuple(_split_first(list(range(p[0])))))
    if name == "star":
        n = p[0]
        if n <= 2:
            return _singletons(n)
        return Partition((1, 2, vertex_set(range(2, n))))
    if name == "doublestar":
        a, b = p
        return Partition((1, 2, vertex_set(range(2, 2 + a)), vertex_set(range(2 + a, 2 + a + b))))
    if name == "multipartite":
        classes = []
        start = 0
        for size in p:
            classes += _split_first(list(range(start, start + size)))
            start += size
        return Partition(tuple(classes))
    return None


# Classifiers ------------------------------------------------------------

MAX_CLASSIFY_ORDER = 12

FAMILY_B = "FamilyB"
FAMILY_F = "FamilyF"
B1 = "B1"
B2 = "B2"
B3 = "B3"
K0 = "K0"
FAMILY_K = "FamilyK"
TWO_MAXIMAL_CLIQUES = "twoMaximalCliques"
ALPHA_TWO = "alphaTwo"


def in_family_b(g: Graph) -> bool:
    n = g.n - 2
    return n >= 4 and are_isomorphic(g, generate(FamilySpec("familyB", (n,))))


def in_family_f(g: Graph) -> bool:
    """Order >= 3, min degree 1, and some leaf ``x`` with support ``y``
    leaves a clique on ``V - {x, y}``."""
    if g.n < 3 or min_degree(g) != 1:
        return False
    for x in range(g.n):
        if g.degree(x) != 1:
            continue
        y = g.adj[x].bit_length() - 1
        rest = g.vertices & ~(1 << x) & ~(1 << y)
        if all((g.adj[v] | (1 << v)) & rest == rest for v in iter_bits(rest)):
            return True
    return False


def _bipartitions(g: Graph):
    """All 2-colourings of a bipartite graph as (side0, side1) masks."""
    color = two_coloring(g)
    if color is None:
        return
    comps = components(g)
    base0 = vertex_set(v for v in range(g.n) if color[v] == 0)
    for flips in range(1 << max(len(comps) - 1, 0)):
        side0 = base0
        for i, comp in enumerate(comps[1:]):
            if flips >> i & 1:
                side0 ^= comp
        yield side0, g.vertices & ~side0


def in_b1(g: Graph) -> bool:
    if g.n < 4 or min_degree(g) < 1 or not is_bipartite(g):
        return False
    if not any(a.bit_count() >= 2 and b.bit_count() >= 2 for a, b in _bipartitions(g)):
        return False
    return idomatic_number(g) == 2


def _split_isolated(g: Graph) -> Optional[Graph]:
    """The non-isolated part ``H`` when ``g = H + isolated vertices`` with both nonempty."""
    iso = isolated_vertices(g)
    if not iso or iso == g.vertices:
        return None
    return induced(g, g.vertices & ~iso)


def in_b2(g: Graph) -> bool:
    h = _split_isolated(g)
    return h is not None and is_bipartite(h) and idomatic_number(h) == 2


def in_b3(g: Graph) -> bool:
    h = _split_isolated(g)
    return h is not None and chromatic_number(h) <= 3 and idomatic_number(h) == 3


def is_k0(g: Graph) -> bool:
    return g.n == 8 and are_isomorphic(g, generate(FamilySpec("K0")))


def family_k_decomposition(g: Graph) -> Optional[list[int]]:
    """Search for parts ``H1..H4`` (labels 0..3 per vertex) meeting the four
    defining conditions of family K, or ``None``."""
    if g.n < 10 or g.n % 2:
        return None
    k = (g.n - 8) // 2
    if set(degree_sequence(g)) != {k + 3} or not is_bipartite(g):
        return None
    sizes = (4, 4, k, k)
    must_adjacent = {frozenset((0, 2)), frozenset((1, 3))}
    must_apart = {frozenset((0, 3)), frozenset((1, 2))}
    matched = {0: 1, 1: 0, 2: 3, 3: 2}
    label = [-1] * g.n
    count = [0, 0, 0, 0]
    # non-neighbours each vertex has so far in its matched part
    misses = [0] * g.n

    def consistent(v: int, part: int) -> bool:
        for u in range(g.n):
            q = label[u]
            if q < 0:
                continue
            adjacent = g.has_edge(u, v)
            if q == part or frozenset((q, part)) in must_apart:
                if adjacent:
                    return False
            elif frozenset((q, part)) in must_adjacent:
                if not adjacent:
                    return False
            elif not adjacent and (misses[u] >= 1 or misses[v] >= 1):
                return False
            elif not adjacent:
                misses[u] += 1
                misses[v] += 1
        return True

    def assign(v: int) -> bool:
        if v == g.n:
            return all(misses[u] == 1 for u in range(g.n))
        for part in range(4):
            if count[part] == sizes[part]:
                continue
            saved = list(misses)
            if consistent(v, part):
                label[v] = part
                count[part] += 1
                if assign(v + 1):
                    return True
                count[part] -= 1
                label[v] = -1
            misses[:] = saved
        return False

    return label if assign(0) else None


def in_family_k(g: Graph) -> bool:
    return family_k_decomposition(g) is not None


def two_maximal_clique_partition(g: Graph) -> Optional[tuple[int, int]]:
    """A split of V into two maximal cliques, or ``None``."""
    if g.n < 2:
        return None
    full = g.vertices
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]

    def is_clique(s: int) -> bool:
        return all(closed[v] & s == s for v in iter_bits(s))

    def is_maximal(s: int) -> bool:
        return not any(closed[v] & s == s for v in iter_bits(full & ~s))

    rest_vertices = full & ~1
    sub = rest_vertices
    # vertex 0 always goes into the first clique
    while True:
        s = 1 | sub
        t = full & ~s
        if t and is_clique(s) and is_clique(t) and is_maximal(s) and is_maximal(t):
            return s, t
        if sub == 0:
            return None
        sub = (sub - 1) & rest_vertices


@dataclass(frozen=True)
class Classification:
    memberships: frozenset[str]

    def __contains__(self, name: str) -> bool:
        return name in self.memberships


def classify(g: Graph) -> Classification:
    if g.n > MAX_CLASSIFY_ORDER:
        raise CapacityError(f"classification supports order <= {MAX_CLASSIFY_ORDER}")
    checks = {
        FAMILY_B: in_family_b,
        FAMILY_F: in_family_f,
        B1: in_b1,
        B2: in_b2,
        B3: in_b3,
        K0: is_k0,
        FAMILY_K: in_family_k,
        TWO_MAXIMAL_CLIQUES: lambda h: two_maximal_clique_partition(h) is not None,
        ALPHA_TWO: lambda h: h.n > 0 and independence_number(h) == 2,
    }
    return Classification(frozenset(name for name, test in checks.items() if test(g)))


# Recognisers for the named shapes ---------------------------------------


def is_complete_graph(g: Graph) -> bool:
    return g.n >= 1 and all(a.bit_count() == g.n - 1 for a in g.adj)


def is_empty_graph(g: Graph) -> bool:
    return g.n >= 1 and not any(g.adj)


def is_path_graph(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g) and max_degree(g) <= 2


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(a.bit_count() == 2 for a in g.adj)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def is_star_graph(g: Graph) -> bool:
    """``K_{1,n-1}`` with ``n >= 3``."""
    return g.n >= 3 and is_tree(g) and max_degree(g) == g.n - 1


def is_double_star(g: Graph) -> bool:
    """``S_{p,q}`` with ``p, q >= 1``: a tree with exactly two adjacent non-leaves."""
    if g.n < 4 or not is_tree(g):
        return False
    inner = [v for v in range(g.n) if g.degree(v) >= 2]
    return len(inner) == 2 and g.has_edge(*inner)


def multipartite_parts(g: Graph) -> Optional[list[int]]:
    """Part sizes when ``g`` is complete multipartite, else ``None``."""
    if g.n == 0:
        return None
    parts = components(complement(g))
    for p in parts:
        for v in iter_bits(p):
            if g.adj[v] & p:
                return None
    for v in range(g.n):
        own = next(p for p in parts if p >> v & 1)
        if g.adj[v] != g.vertices & ~own:
            return None
    return sorted(p.bit_count() for p in parts)
