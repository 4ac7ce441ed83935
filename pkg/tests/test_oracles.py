"""Sanity checks for the reference implementations themselves."""

from itertools import permutations

import pytest

from corpus import C5, RED_K3, T2
from oracles import all_graphs, colored_pairs, graphs_up_to_iso, naive_M, naive_chi, naive_hom


def full_canon(g):
    cp = colored_pairs(g)
    best = None
    for perm in permutations(range(g.n)):
        code = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v]), tuple(sorted(cs))) for (u, v), cs in cp.items()))
        if best is None or code < best:
            best = code
    return best


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_iso_generator_hits_every_class_once(n):
    reps = graphs_up_to_iso(n, 2, 6)
    keys = [full_canon(g) for g in reps]
    assert len(keys) == len(set(keys))
    expected = {full_canon(g) for g in all_graphs(n, 2) if g.num_edges <= 6}
    assert set(keys) == expected


def test_oracles_on_known_graphs():
    assert naive_chi(C5) == 3 and naive_chi(RED_K3) == 3
    assert naive_M(C5) == 1
    assert naive_hom(C5, T2)
