"""Executable checks of the stated results about IC(G).

Each check pairs a scope (the graphs it runs over) with a predicate that
looks at one graph and returns ``None`` when the statement holds for it, or
a short description of the failure.  Predicates depend on the graph alone,
so a counterexample can be re-checked from its graph6 string.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from . import families as fam
from .coalition import (
    MAX_IC_ORDER,
    ICResult,
    coalition_number,
    ic_number,
    iter_ic_partitions,
    partner_counts,
    singleton_partition,
    verify_ic_partition,
)
from .enumeration import census, enumerate_trees
from .families import FamilySpec, generate
from .graph import (
    Graph,
    are_isomorphic,
    components,
    full_vertices,
    girth,
    is_connected,
    is_triangle_free,
    isolated_vertices,
    join,
    max_degree,
    min_degree,
    remove_vertices,
    union,
)
from .graph6 import encode_graph6, parse_graph6
from .invariants import chromatic_number, idomatic_number, independence_number


@dataclass(frozen=True)
class Scope:
    max_order: int = 6
    max_tree_order: int = 9
    max_triangle_free_order: int = 7


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    details: str


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    scope: str
    checked: int
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "counterexample"

    def __str__(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.id:13s} {self.scope} ({self.checked} graphs)"
        if self.counterexample:
            head += f"\n     counterexample {self.counterexample.graph6}: {self.counterexample.details}"
        return head


@lru_cache(maxsize=None)
def ic(g: Graph) -> ICResult:
    return ic_number(g)


@lru_cache(maxsize=None)
def _coalition(g: Graph) -> Optional[int]:
    return coalition_number(g)


def ic_equals_order(g: Graph) -> bool:
    """IC(g) = n.  Only the singleton partition has n classes, so above the
    solver bound validity of that partition decides it exactly."""
    if g.n <= MAX_IC_ORDER:
        return ic(g).value == g.n
    return verify_ic_partition(g, singleton_partition(g)).valid


def _iso_any(g: Graph, specs: Iterable[FamilySpec]) -> bool:
    return any(s.order == g.n and are_isomorphic(g, generate(s)) for s in specs)


def _fmt(r: ICResult) -> str:
    return str(r)


# Predicates --------------------------------------------------------------


def _obs1(g):
    r = ic(g)
    if not r.exists:
        return None
    c = _coalition(g)
    if c is None or r.value > c:
        return f"IC={r.value} but C={c}"


def _obs2(g):
    r = ic(g)
    if r.exists and r.value < chromatic_number(g):
        return f"IC={r.value} < chi={chromatic_number(g)}"


def _the_del(g):
    if not is_connected(g):
        return None
    delta = max_degree(g)
    for p in iter_ic_partitions(g):
        counts = partner_counts(g, p)
        if max(counts) > delta:
            return f"partition {p} has a class with {max(counts)} partners > Delta={delta}"
    if g.n >= 4 and _iso_any(g, [FamilySpec("deltasharp", (g.n - 2,))]):
        single = singleton_partition(g)
        if not verify_ic_partition(g, single).valid or max(partner_counts(g, single)) != delta:
            return "sharpness gadget: singleton partition does not reach Delta partners"


def _the_doma(g):
    if not is_connected(g):
        return None
    t = idomatic_number(g)
    if t is None:
        return None
    r = full_vertices(g).bit_count()
    value = ic(g).value
    if value is None or value < 2 * t - r:
        return f"IC={value} < 2*id - r = 2*{t} - {r}"


def _claim_1(g):
    if fam.in_family_b(g) and ic(g).exists:
        return f"family B member has IC={ic(g).value}"


def _expect(g, recognised: bool, expected: Optional[int], label: str):
    if recognised and ic(g).value != expected:
        return f"{label}: IC={_fmt(ic(g))}, expected {expected}"


def _obs_comp(g):
    return _expect(g, fam.is_complete_graph(g), g.n, "complete graph")


def _prop_star(g):
    return _expect(g, fam.is_star_graph(g), 3, "star")


def _obs_dstar(g):
    return _expect(g, fam.is_double_star(g), 4, "double star")


def _prop5(g):
    parts = fam.multipartite_parts(g)
    if parts is None:
        return None
    expected = 2 * len(parts) - parts.count(1)
    return _expect(g, True, expected, f"K_{parts}")


def _the_path(g):
    if not fam.is_path_graph(g):
        return None
    return _expect(g, True, fam.formula_ic(FamilySpec("path", (g.n,))).value, f"P{g.n}")


def _th_cycle(g):
    if not fam.is_cycle_graph(g):
        return None
    return _expect(g, True, fam.formula_ic(FamilySpec("cycle", (g.n,))).value, f"C{g.n}")


def _lemfull(g):
    f = full_vertices(g)
    r = f.bit_count()
    if r == 0 or r == g.n:
        return None
    whole, rest = ic(g), ic(remove_vertices(g, f))
    expected = None if rest.value is None else rest.value + r
    if whole.value != expected:
        return f"IC(G)={_fmt(whole)} but IC(G-F)={_fmt(rest)} with r={r}"


def _lemiso(g):
    iso = isolated_vertices(g)
    best = ic(g).value
    if not iso or best is None or best < 3:
        return None
    for p in iter_ic_partitions(g):
        if len(p) == best and iso not in p.classes:
            return f"optimal partition {p} does not keep the isolated vertices together"


def _prop2(g):
    value = ic(g).value
    one = g.n == 1
    two = (g.n == 2 and g.edge_count == 1) or (g.n >= 2 and g.edge_count == 0)
    if (value == 1) != one:
        return f"IC={value} but K1 membership is {one}"
    if (value == 2) != two:
        return f"IC={value} but (K2 or empty) membership is {two}"


def _prop3_members(g) -> bool:
    return g.n == 3 and fam.is_complete_graph(g) or fam.is_star_graph(g) or fam.in_b2(g)


def _prop3(g):
    value = ic(g).value
    member = _prop3_members(g)
    if (value == 3) != member:
        return f"IC={value} but membership in {{K3, K1,n-1}} + B2 is {member}"


def prop4_members(g: Graph) -> bool:
    """Membership in K4, K2 + empty(n>=2), K1 + B (B in B2), B1 or B3."""
    if g.n == 4 and fam.is_complete_graph(g):
        return True
    if g.n >= 4 and are_isomorphic(g, join(generate(FamilySpec("complete", (2,))), generate(FamilySpec("empty", (g.n - 2,))))):
        return True
    f = full_vertices(g)
    if f and fam.in_b2(remove_vertices(g, f & -f)):
        return True
    return fam.in_b1(g) or fam.in_b3(g)


def _prop4(g):
    if ic(g).value == 4 and not prop4_members(g):
        return "IC=4 but outside the listed families"


def _dis_n(g):
    if is_connected(g) or g.n == 0:
        return None
    comps = components(g)
    two_cliques = len(comps) == 2 and all(
        all((g.adj[v] | (1 << v)) & c == c for v in range(g.n) if c >> v & 1) for c in comps
    )
    if ic_equals_order(g) != two_cliques:
        return f"IC={_fmt(ic(g))} (n={g.n}) but K_s u K_r membership is {two_cliques}"


def _alpha2(g):
    if g.n and independence_number(g) == 2 and not ic_equals_order(g):
        return f"alpha=2 but IC={_fmt(ic(g))} != n={g.n}"


def _two_cliques(g):
    if fam.two_maximal_clique_partition(g) is not None and not ic_equals_order(g):
        return f"two maximal cliques but IC={_fmt(ic(g))} != n={g.n}"


def _l5(g):
    if g.n == 0 or min_degree(g) != 1:
        return None
    member = (g.n == 2) or fam.in_family_f(g)
    if ic_equals_order(g) != member:
        return f"IC={_fmt(ic(g))} (n={g.n}) but K2-or-F membership is {member}"


def _tree_n(g):
    if not fam.is_tree(g):
        return None
    member = fam.is_path_graph(g) and g.n <= 4
    if ic_equals_order(g) != member:
        return f"tree with IC={_fmt(ic(g))} (n={g.n}), P1..P4 membership {member}"


_T_N_1 = [
    FamilySpec("path", (5,)),
    FamilySpec("path", (6,)),
    FamilySpec("doublestar", (1, 2)),
    FamilySpec("star", (4,)),
]


def _t_n_1(g):
    if not fam.is_tree(g):
        return None
    member = _iso_any(g, _T_N_1)
    if (ic(g).value == g.n - 1) != member:
        return f"tree with IC={_fmt(ic(g))} (n={g.n}), {{P5,P6,S12,K13}} membership {member}"


def _girth7(g):
    if is_triangle_free(g) and ic_equals_order(g):
        gg = girth(g)
        if gg is not None and gg > 6:
            return f"IC=n with girth {gg}"


def _girth_exact(length: int, allowed: Callable[[Graph], bool], label: str):
    def check(g):
        if girth(g) != length:
            return None
        if ic_equals_order(g) != allowed(g):
            return f"girth {length}: IC={_fmt(ic(g)) if g.n <= MAX_IC_ORDER else '?'} (n={g.n}), {label} membership {allowed(g)}"

    return check


def _is_cycle_of(n):
    return lambda g: g.n == n and fam.is_cycle_graph(g)


def _girth4_members(g) -> bool:
    return (g.n == 4 and fam.is_cycle_graph(g)) or fam.is_k0(g) or fam.in_family_k(g)


_TF_LIST = [
    FamilySpec("cycle", (4,)),
    FamilySpec("cycle", (5,)),
    FamilySpec("cycle", (6,)),
    FamilySpec("path", (1,)),
    FamilySpec("path", (2,)),
    FamilySpec("path", (3,)),
    FamilySpec("path", (4,)),
    FamilySpec("empty", (2,)),
]
_K1_K2 = union(generate(FamilySpec("complete", (1,))), generate(FamilySpec("complete", (2,))))
_K2_K2 = union(generate(FamilySpec("complete", (2,))), generate(FamilySpec("complete", (2,))))


def tf_corollary_members(g: Graph) -> bool:
    if _iso_any(g, _TF_LIST) or are_isomorphic(g, _K1_K2) or are_isomorphic(g, _K2_K2):
        return True
    return fam.is_k0(g) or fam.in_family_k(g)


def _tf_corollary(g):
    if not is_triangle_free(g):
        return None
    member = tf_corollary_members(g)
    if ic_equals_order(g) != member:
        return f"triangle-free with IC=n {ic_equals_order(g)} but list membership {member}"


# Scopes --------------------------------------------------------------------


def _graphs(scope: Scope):
    return census(scope.max_order)


def _connected(scope: Scope):
    return [g for g in census(scope.max_order) if is_connected(g)]


def _triangle_free(scope: Scope):
    return census(scope.max_triangle_free_order, triangle_free=True)


def _trees(scope: Scope):
    return [t for n in range(1, scope.max_tree_order + 1) for t in enumerate_trees(n)]


def _family(specs):
    return [generate(s) for s in specs]


def _girth4_family():
    return _family([FamilySpec("K0")] + [FamilySpec("familyK", (k,)) for k in (1, 2, 3)])


def _size_vectors(total: int):
    def parts(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for s in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - s, s):
                yield (s,) + rest

    for n in range(1, total + 1):
        yield from parts(n, n)


@dataclass(frozen=True)
class _Check:
    statement: str
    predicate: Callable[[Graph], Optional[str]]
    scope: Callable[[Scope], list[Graph]]
    describe: Callable[[Scope], str] = field(default=lambda s: f"graphs of order <= {s.max_order}")


def _graphs_desc(s):
    return f"graphs of order <= {s.max_order}"


def _tf_desc(s):
    return f"triangle-free graphs of order <= {s.max_triangle_free_order}, K0, familyK k<=3"


def _tree_desc(s):
    return f"trees of order <= {s.max_tree_order}"


CHECKS: dict[str, _Check] = {
    "obs1": _Check("IC(G) <= C(G) when an ic-partition exists", _obs1, _graphs),
    "obs2": _Check("IC(G) >= chi(G) when an ic-partition exists", _obs2, _graphs),
    "the-del": _Check(
        "connected G: every class of an ic-partition has at most Delta partners (sharp)",
        _the_del,
        lambda s: _connected(s) + _family([FamilySpec("deltasharp", (n,)) for n in range(2, 7)])
        + [_K2_K2],
        lambda s: f"connected graphs of order <= {s.max_order}, deltasharp n<=6, K2uK2",
    ),
    "the-doma": _Check("connected G with an idomatic partition: IC >= 2 id - r", _the_doma, _connected,
                       lambda s: f"connected graphs of order <= {s.max_order}"),
    "claim-1": _Check(
        "family B graphs have no ic-partition",
        _claim_1,
        lambda s: _family([FamilySpec("familyB", (n,)) for n in range(4, 8)]) + _graphs(s),
        lambda s: f"familyB n=4..7 and graphs of order <= {s.max_order}",
    ),
    "obs-comp": _Check(
        "IC(K_n) = n",
        _obs_comp,
        lambda s: _family([FamilySpec("complete", (n,)) for n in range(1, 9)]),
        lambda s: "K_n for n <= 8",
    ),
    "prop-star": _Check(
        "IC(K_{1,n-1}) = 3 for n >= 3",
        _prop_star,
        lambda s: _family([FamilySpec("star", (n,)) for n in range(3, 11)]) + _graphs(s),
        lambda s: f"stars of order 3..10 and graphs of order <= {s.max_order}",
    ),
    "obs-dstar": _Check(
        "IC(S_{p,q}) = 4",
        _obs_dstar,
        lambda s: _family([FamilySpec("doublestar", (p, q)) for p in range(1, 5) for q in range(p, 5)]),
        lambda s: "double stars with 1 <= p <= q <= 4",
    ),
    "prop5": _Check(
        "IC(K_{n1..nk}) = 2k - m",
        _prop5,
        lambda s: _family([FamilySpec("multipartite", v) for v in _size_vectors(8)]),
        lambda s: "complete multipartite graphs of order <= 8",
    ),
    "the-path": _Check(
        "IC(P_n) piecewise",
        _the_path,
        lambda s: _family([FamilySpec("path", (n,)) for n in range(1, 12)]),
        lambda s: "P_n for n <= 11",
    ),
    "th-cycle": _Check(
        "IC(C_n) piecewise",
        _th_cycle,
        lambda s: _family([FamilySpec("cycle", (n,)) for n in range(3, 12)]),
        lambda s: "C_n for 3 <= n <= 11",
    ),
    "lemfull": _Check("IC(G) = k iff IC(G - F) = k - r", _lemfull, _graphs),
    "lemiso": _Check("isolated vertices form one class of every IC(G)-partition when IC >= 3", _lemiso, _graphs),
    "prop2": _Check("IC=1 iff K1; IC=2 iff K2 or empty graph", _prop2, _graphs),
    "prop3": _Check("IC=3 iff K3, K_{1,n-1} or B2", _prop3, _graphs),
    "prop4": _Check("IC=4 implies K4, K2+empty, K1+B2, B1 or B3", _prop4, _graphs),
    "dis-n": _Check("disconnected G: IC=n iff K_s u K_r", _dis_n, _graphs),
    "alpha2": _Check("alpha(G)=2 implies IC=n", _alpha2, _graphs),
    "two-cliques": _Check("two maximal cliques partition implies IC=n", _two_cliques, _graphs),
    "l5": _Check("delta(G)=1: IC=n iff K2 or family F", _l5, _graphs),
    "tree-n": _Check("trees: IC=n iff P1..P4", _tree_n, _trees, _tree_desc),
    "girth7": _Check(
        "triangle-free with IC=n has girth <= 6",
        _girth7,
        lambda s: _triangle_free(s) + _family([FamilySpec("cycle", (n,)) for n in range(7, 12)]),
        lambda s: f"triangle-free graphs of order <= {s.max_triangle_free_order}, C7..C11",
    ),
    "girth6": _Check(
        "girth 6: IC=n iff C6",
        _girth_exact(6, _is_cycle_of(6), "C6"),
        _triangle_free,
        lambda s: f"triangle-free graphs of order <= {s.max_triangle_free_order}",
    ),
    "girth5": _Check(
        "girth 5: IC=n iff C5",
        _girth_exact(5, _is_cycle_of(5), "C5"),
        _triangle_free,
        lambda s: f"triangle-free graphs of order <= {s.max_triangle_free_order}",
    ),
    "girth4": _Check(
        "girth 4: IC=n iff C4, K0 or family K",
        _girth_exact(4, _girth4_members, "{C4, K0} u K"),
        lambda s: _triangle_free(s) + _girth4_family(),
        _tf_desc,
    ),
    "tf-corollary": _Check(
        "triangle-free: IC=n iff in the listed graphs, K0 or family K",
        _tf_corollary,
        lambda s: _triangle_free(s) + _girth4_family(),
        _tf_desc,
    ),
    "t-n-1": _Check("trees: IC=n-1 iff P5, P6, S_{1,2}, K_{1,3}", _t_n_1, _trees, _tree_desc),
}


def run_check(check_id: str, scope: Scope = Scope()) -> TheoremCheck:
    try:
        check = CHECKS[check_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {check_id!r}") from None
    graphs = check.scope(scope)
    for g in graphs:
        details = check.predicate(g)
        if details is not None:
            return TheoremCheck(check_id, check.describe(scope), len(graphs), Counterexample(encode_graph6(g), details))
    return TheoremCheck(check_id, check.describe(scope), len(graphs))


def run_checks(ids: Iterable[str] = (), scope: Scope = Scope()) -> list[TheoremCheck]:
    chosen = list(ids) or list(CHECKS)
    unknown = [i for i in chosen if i not in CHECKS]
    if unknown:
        raise KeyError(f"unknown theorem id(s): {', '.join(unknown)}")
    return [run_check(i, scope) for i in chosen]


def recheck(check_id: str, graph6: str) -> Optional[str]:
    """Re-evaluate one predicate on a graph given as graph6."""
    return CHECKS[check_id].predicate(parse_graph6(graph6))
