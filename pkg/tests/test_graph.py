from itertools import product

import pytest
from conftest import family_b_six, graphs
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_isomorphic, edge_set, naive_girth

from icpart.enumeration import enumerate_graphs
from icpart.families import FamilySpec, generate
from icpart.graph import (
    CapacityError,
    Graph,
    are_isomorphic,
    build,
    complement,
    components,
    degree,
    edge_set_between,
    full_vertices,
    girth,
    induced,
    invariant_key,
    is_bipartite,
    is_connected,
    is_triangle_free,
    isolated_vertices,
    join,
    max_degree,
    members,
    min_degree,
    remove_vertices,
    union,
    vertex_set,
)

K0_EDGES = [
    ("v1", "u3"), ("v1", "u4"), ("v1", "u2"), ("v2", "u1"), ("v2", "u3"), ("v2", "u4"),
    ("v3", "u1"), ("v3", "u2"), ("v3", "u4"), ("v4", "u1"), ("v4", "u2"), ("v4", "u3"),
]


def k0_by_hand() -> Graph:
    index = {f"v{i}": i - 1 for i in range(1, 5)} | {f"u{i}": i + 3 for i in range(1, 5)}
    return build(8, [(index[a], index[b]) for a, b in K0_EDGES])


def rook_complement() -> Graph:
    # K4 x K2 rook graph: cells (row, col) attack along rows and columns
    cells = list(product(range(4), range(2)))
    edges = [
        (a, b)
        for a, (r1, c1) in enumerate(cells)
        for b, (r2, c2) in enumerate(cells)
        if a < b and (r1 == r2 or c1 == c2)
    ]
    return complement(build(8, edges))


def K(n):
    return generate(FamilySpec("complete", (n,)))


def C(n):
    return generate(FamilySpec("cycle", (n,)))


def P(n):
    return generate(FamilySpec("path", (n,)))


def empty(n):
    return build(n, [])


class TestBuild:
    def test_triangle(self):
        g = build(3, [(0, 1), (1, 2), (0, 2)])
        assert g.edge_count == 3 and are_isomorphic(g, K(3))

    def test_no_edges(self):
        g = build(2, [])
        assert g.edge_count == 0 and g.n == 2

    def test_family_b_six_degrees(self):
        g = family_b_six()
        assert degree(g, 3) == 5
        assert degree(g, 5) == 1

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            build(3, edges)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            build(65, [])
        assert build(64, [(0, 63)]).has_edge(63, 0)


class TestOperations:
    def test_complement_of_complete(self):
        assert complement(K(4)) == empty(4)

    def test_c5_self_complementary(self):
        assert are_isomorphic(complement(C(5)), C(5))

    def test_complement_involution_exhaustive(self):
        for n in range(7):
            for g in enumerate_graphs(n):
                assert complement(complement(g)) == g

    def test_join_star(self):
        g = join(K(1), empty(3))
        assert are_isomorphic(g, generate(FamilySpec("star", (4,))))

    def test_union_two_edges(self):
        g = union(K(2), K(2))
        assert g.n == 4 and g.edge_count == 2 and max_degree(g) == 1

    def test_induced_clique_of_family_b_six(self):
        assert induced(family_b_six(), vertex_set(range(4))) == K(4)

    def test_remove_vertices_relabels(self):
        g = remove_vertices(P(4), vertex_set([0]))
        assert g == P(3)


class TestStructure:
    def test_girth(self):
        assert girth(C(6)) == 6
        assert girth(P(5)) is None
        assert girth(k0_by_hand()) == 4
        assert naive_girth(8, edge_set(k0_by_hand())) == 4

    def test_full_vertex_of_star(self):
        assert members(full_vertices(generate(FamilySpec("star", (5,))))) == [0]

    def test_edge_set_between_family_k(self):
        g = generate(FamilySpec("familyK", (2,)))
        h1, h4 = vertex_set(range(4)), vertex_set([10, 11])
        assert edge_set_between(g, h1, h4) == "empty"
        assert edge_set_between(g, h1, vertex_set([8, 9])) == "full"
        assert edge_set_between(g, vertex_set([8, 9]), h4) == "mixed"

    def test_edge_set_between_overlap(self):
        with pytest.raises(ValueError):
            edge_set_between(K(3), 0b011, 0b110)

    def test_isolated_vertices(self):
        g = union(empty(3), K(2))
        assert members(isolated_vertices(g)) == [0, 1, 2]

    def test_connectivity(self):
        assert is_connected(P(4))
        assert not is_connected(union(K(1), K(1)))
        assert len(components(union(K(2), empty(2)))) == 3
        assert min_degree(P(4)) == 1

    def test_bipartite(self):
        assert is_bipartite(C(6)) and not is_bipartite(C(5))


class TestIsomorphism:
    def test_examples(self):
        assert are_isomorphic(C(5), complement(C(5)))
        assert not are_isomorphic(P(4), generate(FamilySpec("star", (4,))))

    def test_k0_is_rook_complement(self):
        a, b = k0_by_hand(), rook_complement()
        assert brute_isomorphic(8, edge_set(a), 8, edge_set(b))
        assert are_isomorphic(a, b)
        assert are_isomorphic(a, generate(FamilySpec("K0", ())))

    def test_against_permutation_oracle(self):
        # all labelled graphs of order 4 against a fixed set of representatives
        reps = list(enumerate_graphs(4, up_to_isomorphism=True))
        for g in enumerate_graphs(4):
            for h in reps:
                assert are_isomorphic(g, h) == brute_isomorphic(4, edge_set(g), 4, edge_set(h))

    @given(graphs(max_order=7), graphs(max_order=7))
    def test_isomorphic_graphs_share_key(self, g, h):
        if are_isomorphic(g, h):
            assert invariant_key(g) == invariant_key(h)

    @given(graphs(max_order=8), st.randoms(use_true_random=False))
    def test_relabelling_preserves_isomorphism(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = build(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert are_isomorphic(g, h)
        assert invariant_key(g) == invariant_key(h)


@given(graphs(max_order=9))
def test_adjacency_is_symmetric_and_irreflexive(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        assert g.adj[v] >> g.n == 0
        for u in range(g.n):
            assert (g.adj[v] >> u & 1) == (g.adj[u] >> v & 1)


@given(graphs(max_order=6), graphs(max_order=6))
def test_join_edge_count(g, h):
    assert join(g, h).edge_count == g.edge_count + h.edge_count + g.n * h.n


def test_girth_three_iff_triangle_exhaustive():
    for n in range(7):
        for g in enumerate_graphs(n, up_to_isomorphism=True):
            assert (girth(g) == 3) == (not is_triangle_free(g))
