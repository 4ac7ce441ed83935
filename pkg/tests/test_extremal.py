import pytest
from hypothesis import given, settings, strategies as st

from corpus import DOUBLE_K3, G, PATTERNS, RB_PATH, RED_EDGE, RED_K3, T1, T2, B, R
from oracles import naive_contains, naive_mex
from mextremal.errors import ColorCountMismatch, PatternHasNoEdge, SearchTooLarge
from mextremal.extremal import decision_avoidable, max_edges_avoiding, mex_exact


def check(res, patterns):
    assert res.verify(patterns)
    assert not any(naive_contains(res.witness, p) for p in patterns)


def test_rb_path_n6():
    res = mex_exact(6, 2, [RB_PATH])
    assert res.value == 3 and res.exhaustive
    check(res, [RB_PATH])


@pytest.mark.parametrize("n", [4, 5])
def test_rb_path_small_n_double_edges(n):
    # a perfect set of double edges has no three-vertex path at all
    res = mex_exact(n, 2, [RB_PATH])
    assert res.value == 2
    check(res, [RB_PATH])


@pytest.mark.parametrize("n", range(2, 7))
def test_red_edge_forces_zero(n):
    res = mex_exact(n, 2, [RED_EDGE])
    assert res.value == 0
    assert res.witness.edge_count(R) == 0


def test_red_triangle_n5():
    res = mex_exact(5, 2, [RED_K3])
    assert res.value == 6
    check(res, [RED_K3])


def test_max_edges_examples():
    res = max_edges_avoiding(3, 2, [T1, T2])
    assert res.value == 4
    check(res, [T1, T2])
    assert max_edges_avoiding(2, 2, []).value == 2
    assert max_edges_avoiding(4, 2, [T1, T2]).value <= 8


def test_decision_examples():
    assert decision_avoidable(4, 2, [RB_PATH], (1, 1)) is not None
    w = decision_avoidable(4, 2, [RB_PATH], (0, 0))
    assert w is not None
    assert decision_avoidable(4, 2, [RB_PATH], (3, 3)) is None
    assert decision_avoidable(4, 2, [RB_PATH], (7, 0)) is None


def test_decision_witness_meets_thresholds():
    w = decision_avoidable(5, 2, [RED_K3], (6, 10))
    assert w is not None
    assert w.edge_count(R) >= 6 and w.edge_count(B) == 10
    assert not naive_contains(w, RED_K3)


def test_errors():
    with pytest.raises(PatternHasNoEdge):
        mex_exact(3, 2, [G(2, [])])
    with pytest.raises(ColorCountMismatch):
        mex_exact(3, 3, [RB_PATH])
    with pytest.raises(SearchTooLarge):
        decision_avoidable(6, 2, [T1, T2], (9, 9), node_limit=5)


def test_node_limit_gives_non_exhaustive_result():
    res = mex_exact(6, 2, [RB_PATH], node_limit=30)
    assert not res.exhaustive
    assert res.verify([RB_PATH])


def test_symmetry_breaking_does_not_change_values():
    for pats in ([RB_PATH], [RED_K3], [T1, T2]):
        a = mex_exact(5, 2, pats)
        b = mex_exact(5, 2, pats, symmetry=False)
        assert a.value == b.value


def test_decisions_are_monotone():
    res = mex_exact(6, 2, [RB_PATH])
    feasible = [t for t, ok in res.decisions if ok]
    infeasible = [t for t, ok in res.decisions if not ok]
    assert max(feasible) <= res.value < min(infeasible)


def test_parallel_matches_sequential():
    seq = mex_exact(6, 2, [RB_PATH])
    par = mex_exact(6, 2, [RB_PATH], threads=2)
    assert (par.value, par.witness) == (seq.value, seq.witness)
    m1 = max_edges_avoiding(5, 2, [T1, T2])
    m2 = max_edges_avoiding(5, 2, [T1, T2], threads=2)
    assert (m1.value, m1.witness) == (m2.value, m2.witness)


@pytest.mark.parametrize("name", ["rb_path", "rr_path", "red_k3", "double_k3", "t1", "t2", "double_edge", "red_edge"])
@pytest.mark.parametrize("objective", ["mex", "max-total-edges"])
def test_small_values_match_naive_enumerator(name, objective):
    pat = PATTERNS[name]
    fn = mex_exact if objective == "mex" else max_edges_avoiding
    for n in (3, 4):
        assert fn(n, 2, [pat]).value == naive_mex(n, 2, [pat], objective)


def test_multi_pattern_matches_naive():
    pats = [T1, T2]
    assert max_edges_avoiding(4, 2, pats).value == naive_mex(4, 2, pats, "max-total-edges") == 8
    pats = [RB_PATH, DOUBLE_K3]
    assert mex_exact(4, 2, pats).value == naive_mex(4, 2, pats)


def test_three_colours_small():
    pat = G(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)], r=3)
    assert mex_exact(3, 3, [pat]).value == naive_mex(3, 3, [pat])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.sampled_from([(0, 1), (0, 2), (1, 2)]), st.sampled_from([1, 2])),
                min_size=1, max_size=4, unique=True))
def test_random_triangle_patterns_match_naive(edges):
    pat = G(3, [(u, v, c) for (u, v), c in edges])
    for obj, fn in (("mex", mex_exact), ("max-total-edges", max_edges_avoiding)):
        assert fn(4, 2, [pat]).value == naive_mex(4, 2, [pat], obj)
