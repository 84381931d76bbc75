import pytest
from conftest import family_b_six
from hypothesis import given, settings
from hypothesis import strategies as st

from icpart.coalition import ic_number, verify_ic_partition
from icpart.families import (
    ALPHA_TWO,
    B1,
    B2,
    B3,
    FAMILY_B,
    FAMILY_F,
    FAMILY_K,
    K0,
    FamilySpec,
    classify,
    family_k_decomposition,
    formula_ic,
    generate,
    in_b1,
    in_b2,
    in_b3,
    in_family_f,
    is_cycle_graph,
    is_double_star,
    is_family_text,
    is_path_graph,
    is_star_graph,
    is_tree,
    multipartite_parts,
    parse_family,
    two_maximal_clique_partition,
    witness_partition,
)
from icpart.graph import (
    are_isomorphic,
    build,
    girth,
    is_bipartite,
    is_triangle_free,
    max_degree,
    min_degree,
    union,
)


def spec(name, *params):
    return FamilySpec(name, params)


class TestSpecs:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("path:9", spec("path", 9)),
            ("multipartite:1,2,3", spec("multipartite", 1, 2, 3)),
            ("familyK:2", spec("familyK", 2)),
            ("K0", spec("K0")),
            ("doublestar: 2, 3", spec("doublestar", 2, 3)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_family(text) == expected
        assert parse_family(str(expected)) == expected

    @pytest.mark.parametrize(
        "text", ["path", "path:0", "cycle:2", "familyB:3", "nope:3", "path:x", "doublestar:1", "K0:1"]
    )
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_family(text)

    def test_family_text_detection(self):
        assert is_family_text("cycle:5") and is_family_text("K0")
        assert not is_family_text("Bw") and not is_family_text("A_")


class TestGenerate:
    def test_family_b_is_family_b_six(self):
        g = generate(spec("familyB", 4))
        assert g == family_b_six()
        assert g.n == 6 and g.edge_count == 9

    def test_k0(self):
        g = generate(spec("K0"))
        assert g.n == 8 and g.edge_count == 12
        assert is_bipartite(g) and min_degree(g) == max_degree(g) == 3
        assert girth(g) == 4 and is_triangle_free(g)

    def test_family_k_three(self):
        g = generate(spec("familyK", 3))
        # K0 edges, 3 + 3 hubs joined to a side each, and a 6-cycle among them
        assert g.n == 14 and g.edge_count == 12 + 12 + 12 + 6
        assert girth(g) == 4

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_family_k_girth(self, k):
        assert girth(generate(spec("familyK", k))) == 4

    @pytest.mark.parametrize(
        "s, shape",
        [
            (spec("path", 6), is_path_graph),
            (spec("cycle", 6), is_cycle_graph),
            (spec("star", 5), is_star_graph),
            (spec("doublestar", 2, 3), is_double_star),
            (spec("doublestar", 1, 1), is_tree),
        ],
    )
    def test_shapes(self, s, shape):
        assert shape(generate(s))

    def test_multipartite_parts(self):
        assert sorted(multipartite_parts(generate(spec("multipartite", 3, 1, 2)))) == [1, 2, 3]
        assert multipartite_parts(generate(spec("path", 4))) is None


class TestFormula:
    @pytest.mark.parametrize(
        "s, value",
        [
            (spec("path", 9), 5),
            (spec("multipartite", 1, 2, 3), 5),
            (spec("familyB", 5), None),
            (spec("cycle", 8), 6),
            (spec("deltasharp", 4), 6),
            (spec("K0"), 8),
            (spec("familyK", 2), 12),
        ],
    )
    def test_values(self, s, value):
        assert formula_ic(s).value == value

    def test_path_table(self):
        assert [formula_ic(spec("path", n)).value for n in range(1, 12)] == [1, 2, 3, 4, 4, 5, 5, 5, 5, 6, 6]

    def test_cycle_table(self):
        assert [formula_ic(spec("cycle", n)).value for n in range(3, 12)] == [3, 4, 5, 6, 5, 6, 6, 6, 6]


def _all_specs_up_to(order):
    out = []
    for n in range(1, order + 1):
        out += [spec("path", n), spec("complete", n), spec("empty", n), spec("star", n)]
        if n >= 3:
            out.append(spec("cycle", n))
    for p in range(1, 5):
        for q in range(p, 5):
            if p + q + 2 <= order:
                out.append(spec("doublestar", p, q))
    for n in range(4, order - 1):
        out.append(spec("familyB", n))
    for n in range(2, order - 1):
        out.append(spec("deltasharp", n))
    if order >= 8:
        out.append(spec("K0"))
    return out


class TestWitness:
    def test_cycle_seven(self):
        assert witness_partition(spec("cycle", 7)).as_lists() == [[0, 2], [4], [5], [3, 6], [1]]

    def test_path_ten(self):
        assert witness_partition(spec("path", 10)).as_lists() == [
            [0, 5, 8], [1, 4, 9], [2], [3], [6], [7]
        ]

    def test_star_six(self):
        assert witness_partition(spec("star", 6)).as_lists() == [[0], [1], [2, 3, 4, 5]]

    def test_cycle_eleven(self):
        w = witness_partition(spec("cycle", 11))
        assert sorted(map(len, w.as_lists())) == [1, 1, 2, 2, 2, 3]
        assert verify_ic_partition(generate(spec("cycle", 11)), w).valid

    def test_family_b_has_none(self):
        assert witness_partition(spec("familyB", 4)) is None

    @pytest.mark.parametrize("s", _all_specs_up_to(20), ids=str)
    def test_witness_matches_formula(self, s):
        w = witness_partition(s)
        if w is None:
            assert not formula_ic(s).exists
            return
        assert verify_ic_partition(generate(s), w).valid
        assert len(w) == formula_ic(s).value

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_family_k(self, k):
        s = spec("familyK", k)
        assert verify_ic_partition(generate(s), witness_partition(s)).valid
        assert len(witness_partition(s)) == formula_ic(s).value == 8 + 2 * k


@pytest.mark.parametrize("s", _all_specs_up_to(11), ids=str)
def test_solver_matches_formula(s):
    assert ic_number(generate(s)).value == formula_ic(s).value


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4).filter(lambda v: sum(v) <= 9))
def test_multipartite_solver_matches_formula(sizes):
    s = FamilySpec("multipartite", tuple(sizes))
    assert ic_number(generate(s)).value == formula_ic(s).value


class TestClassify:
    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_family_b(self, n):
        assert FAMILY_B in classify(generate(spec("familyB", n)))

    def test_family_b_six_only_b(self):
        assert classify(family_b_six()).memberships == {FAMILY_B}

    def test_p4_in_f(self):
        assert in_family_f(generate(spec("path", 4)))
        assert FAMILY_F in classify(generate(spec("path", 4)))

    def test_family_k_one(self):
        c = classify(generate(spec("familyK", 1)))
        assert FAMILY_K in c and K0 not in c

    def test_k0(self):
        assert K0 in classify(generate(spec("K0")))

    def test_decomposition_relabelled(self):
        g = generate(spec("familyK", 2))
        perm = [5, 11, 0, 7, 3, 9, 1, 10, 2, 8, 4, 6]
        h = build(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert family_k_decomposition(h) is not None
        assert family_k_decomposition(generate(spec("cycle", 12))) is None

    def test_b_families(self):
        c4 = generate(spec("cycle", 4))
        assert in_b1(c4)
        # H u isolated vertices with H bipartite of idomatic number 2
        assert in_b2(union(generate(spec("path", 2)), build(1, [])))
        assert not in_b2(generate(spec("path", 2)))
        # C6 plus an isolated vertex: chromatic 2, idomatic 3
        assert in_b3(union(generate(spec("cycle", 6)), build(1, [])))

    def test_cliques_and_alpha(self):
        assert two_maximal_clique_partition(generate(spec("path", 4))) == (0b0011, 0b1100)
        # {2} is not a maximal clique of P3
        g = generate(spec("path", 3))
        assert two_maximal_clique_partition(g) is None
        assert ALPHA_TWO in classify(g)
        assert B1 not in classify(g) and B2 not in classify(g) and B3 not in classify(g)

    def test_relabelled_family_b(self):
        g = generate(spec("familyB", 5))
        perm = [6, 2, 0, 5, 1, 3, 4]
        h = build(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert are_isomorphic(g, h) and FAMILY_B in classify(h)
