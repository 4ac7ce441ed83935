import pytest

from corpus import G, T1, B, R, clique
from mextremal.constructions import turan_graph
from mextremal.errors import ColorCountMismatch, MatchingTooLarge, PartitionNotProperForCore
from mextremal.graphcore import ColoredMultigraph, blow_up, contains_colored
from mextremal.pipeline import (
    PPrimeSpec,
    build_pprime,
    find_clique,
    find_pprime,
    max_cut,
    max_k_partite,
    multiplicity_r_core,
)


def test_build_pprime_shapes():
    p = build_pprime(PPrimeSpec(2, (R,), 2))
    assert p.n == 3 and p.colors(0, 1) == frozenset({R})
    assert p.colors(0, 2) == p.colors(1, 2) == frozenset({R, B})
    assert contains_colored(p, T1) is not None
    full = build_pprime(PPrimeSpec(2, (), 2))
    assert full == clique(3, (R, B))
    q = build_pprime(PPrimeSpec(3, (R, B), 2))
    singles = [(u, v) for u, v in q.pairs() if len(q.colors(u, v)) == 1]
    assert singles == [(0, 1), (2, 3)]
    assert sum(1 for u, v in q.pairs() if len(q.colors(u, v)) == 2) == 4
    with pytest.raises(MatchingTooLarge):
        PPrimeSpec(2, (R, B), 2)


def test_core():
    assert multiplicity_r_core(T1).pairs() == [(0, 1)]
    assert multiplicity_r_core(G(3, [(0, 1, R), (1, 2, B)])).num_edges == 0
    assert multiplicity_r_core(clique(4, (R, B))).num_edges == 6


def test_max_k_partite_exact():
    core = multiplicity_r_core(clique(5, (R, B)))
    parts, how = max_k_partite(core, 2)
    assert how == "exact"
    assert sorted(len(p) for p in parts) == [2, 3]


def test_max_cut_bipartite_and_bound():
    verts = list(range(5))
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]
    side, cut, exact = max_cut(verts, edges)
    assert exact
    assert all((u in side) != (v in side) for u, v in cut)
    assert len(cut) >= len(edges) / 2
    assert len(cut) == 5


def test_find_clique():
    g = turan_graph(6, 3)
    adj = [0] * 6
    for u, v in g.pairs():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    cl = find_clique(adj, 6, 3)
    assert cl is not None and len(cl) == 3
    assert find_clique(adj, 6, 4) is None


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("colors", [(), (R,)])
def test_blow_up_hosts(k, colors):
    spec = PPrimeSpec(k, colors, 2)
    h = blow_up(build_pprime(spec), 3)
    res = find_pprime(h, spec, rounds=10, seed=0)
    assert res.found
    assert res.embedding.check(build_pprime(spec), h)
    assert res.trace.identity_holds()


def test_full_clique_host():
    h = clique(4, (R, B))
    res = find_pprime(h, PPrimeSpec(3, (R,), 2))
    assert res.found


def test_bipartite_host_has_no_triangle():
    h = blow_up(clique(2, (R, B)), 3)
    res = find_pprime(h, PPrimeSpec(2, (R,), 2), rounds=5)
    assert not res.found
    assert len(res.trace.rounds) == 5
    assert res.trace.identity_holds()


def test_trace_is_reproducible():
    spec = PPrimeSpec(3, (R,), 2)
    h = blow_up(build_pprime(spec), 3)
    a = find_pprime(h, spec, seed=5).trace.as_dict()
    b = find_pprime(h, spec, seed=5).trace.as_dict()
    assert a == b


def test_cut_lower_bound_in_trace():
    spec = PPrimeSpec(3, (R,), 2)
    h = blow_up(build_pprime(spec), 3)
    tr = find_pprime(h, spec).trace
    for rt in tr.rounds:
        for f, c, exact in zip(rt.f_edges, rt.cut_edges, rt.cut_exact):
            if exact:
                assert 2 * c >= f


def test_errors():
    with pytest.raises(ColorCountMismatch):
        find_pprime(clique(3, r=3), PPrimeSpec(2, (R,), 2))
    h = clique(3, (R, B))
    with pytest.raises(PartitionNotProperForCore):
        find_pprime(h, PPrimeSpec(2, (R,), 2), partition=[[0], [1], [2]])
    with pytest.raises(PartitionNotProperForCore):
        find_pprime(h, PPrimeSpec(2, (R,), 2), partition=[[0], [1]])


def test_given_partition_is_used():
    spec = PPrimeSpec(2, (R,), 2)
    h = blow_up(build_pprime(spec), 2)
    res = find_pprime(h, spec, partition=[[0, 1, 2, 3], [4, 5]])
    assert res.trace.partition_source == "given"
    assert res.found
