import pytest

from icpart import theorems
from icpart.coalition import ic_number
from icpart.graph6 import parse_graph6
from icpart.theorems import CHECKS, Scope, recheck, run_check, run_checks

IDS = [
    "obs1", "obs2", "the-del", "the-doma", "claim-1", "obs-comp", "prop-star", "obs-dstar",
    "prop5", "the-path", "th-cycle", "lemfull", "lemiso", "prop2", "prop3", "prop4", "dis-n",
    "alpha2", "two-cliques", "l5", "tree-n", "girth7", "girth6", "girth5", "girth4",
    "tf-corollary", "t-n-1",
]


def test_every_id_registered():
    assert list(CHECKS) == IDS


@pytest.mark.parametrize("check_id", IDS)
def test_default_scope_passes(check_id):
    result = run_check(check_id)
    assert result.passed, str(result)
    assert result.checked > 0 and result.verdict == "pass"


def test_del_scope_includes_disconnected_exception():
    result = run_check("the-del")
    assert "K2uK2" in result.scope


def test_unknown_id():
    with pytest.raises(KeyError):
        run_checks(["obs1", "nope"])


def test_small_scope():
    results = run_checks(["obs1", "tree-n"], Scope(max_order=4, max_tree_order=5))
    assert [r.id for r in results] == ["obs1", "tree-n"]
    assert results[0].checked == 1 + 2 + 4 + 11


def test_counterexample_rechecks(monkeypatch):
    # a false statement must produce a counterexample that fails again from its graph6
    def every_graph_has_ic_n(g):
        r = ic_number(g)
        return None if r.value == g.n else f"IC={r}"

    monkeypatch.setitem(
        CHECKS, "false-claim", theorems._Check("IC(G) = n", every_graph_has_ic_n, theorems._graphs)
    )
    result = run_check("false-claim", Scope(max_order=4))
    assert not result.passed and result.verdict == "counterexample"
    cx = result.counterexample
    assert recheck("false-claim", cx.graph6) == cx.details
    assert ic_number(parse_graph6(cx.graph6)).value != parse_graph6(cx.graph6).n
    assert "FAIL" in str(result) and cx.graph6 in str(result)
