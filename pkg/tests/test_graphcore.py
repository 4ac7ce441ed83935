import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import colored_graphs
from corpus import BLUE_K3, C5, G, PATTERNS, RB_PATH, RED_K3, T1, T2, TARGETS, B, R, clique
from oracles import colored_pairs, naive_contains, naive_hom
from mextremal.errors import ColorCountMismatch, ColorOutOfRange, Loop, VertexOutOfRange
from mextremal.graphcore import (
    ColoredMultigraph,
    Embedding,
    HomWitness,
    blow_up,
    color_mask,
    contains_colored,
    hom_exists,
    mask_colors,
    underlying_simple,
)


def test_mask_helpers_round_trip():
    assert color_mask([1, 3]) == 0b101
    assert mask_colors(0b101) == (1, 3)
    assert mask_colors(0) == ()


def test_single_red_edge_is_valid():
    g = G(2, [(0, 1, R)])
    assert g.edge_counts() == (1, 0)
    assert g.colors(1, 0) == frozenset({R})


@pytest.mark.parametrize(
    "triples, err",
    [
        ([(0, 0, 1)], Loop),
        ([(0, 1, 3)], ColorOutOfRange),
        ([(0, 1, 0)], ColorOutOfRange),
        ([(0, 5, 1)], VertexOutOfRange),
    ],
)
def test_validation_errors(triples, err):
    with pytest.raises(err):
        ColoredMultigraph.from_edges(3, 2, triples)


def test_repeated_triples_collapse_in_the_constructor():
    # only the file formats treat repeats as errors; see test_formats
    g = ColoredMultigraph.from_edges(3, 2, [(0, 1, 1), (1, 0, 1)])
    assert g.edge_counts() == (1, 0)


def test_errors_are_value_errors_with_names():
    with pytest.raises(ValueError) as info:
        G(2, [(0, 0, 1)])
    assert info.value.name == "Loop"


def test_underlying_simple():
    u = underlying_simple(T1)
    assert u.r == 1 and u.num_edges == 3
    assert underlying_simple(G(4, [])).num_edges == 0
    assert underlying_simple(C5).num_edges == 5


def test_masks_and_color_degrees_agree_with_edges():
    g = PATTERNS["k23_mixed"]
    for u, v in itertools.combinations(range(g.n), 2):
        assert mask_colors(g.mask(u, v)) == tuple(sorted(colored_pairs(g).get((u, v), ())))
    for v in range(g.n):
        for c in (1, 2):
            assert g.color_degrees[v][c - 1] == sum(1 for w in range(g.n) if c in g.colors(v, w))


def test_relabel_and_induced():
    g = T2.relabel([2, 0, 1])
    assert g.colors(2, 0) == frozenset({R, B})
    assert g.colors(2, 1) == frozenset({R})
    assert g.colors(0, 1) == frozenset({B})
    sub = T2.induced([0, 2])
    assert sub.n == 2 and sub.colors(0, 1) == frozenset({R})


def test_permute_colors_swaps_classes():
    sw = RED_K3.permute_colors([2, 1])
    assert sw == BLUE_K3


# -- containment ---------------------------------------------------------------


def test_pattern_equal_to_host_is_found():
    host = G(3, [(0, 1, R), (0, 2, B)])
    emb = contains_colored(host, RB_PATH)
    assert emb is not None and emb.check(RB_PATH, host)


def test_blue_triangle_has_no_red_triangle():
    assert contains_colored(BLUE_K3, RED_K3) is None


def test_c5_in_blow_up_of_t2():
    host = blow_up(T2, 3)
    emb = contains_colored(host, C5)
    assert emb is not None and emb.check(C5, host)
    assert naive_contains(host, C5)


def test_containment_rejects_colour_count_mismatch():
    with pytest.raises(ColorCountMismatch):
        contains_colored(clique(3, r=3), RED_K3)


def test_pattern_larger_than_host():
    assert contains_colored(RED_K3, clique(4)) is None


def test_embedding_check_detects_bad_maps():
    host = G(3, [(0, 1, R), (0, 2, B)])
    assert Embedding((1, 0, 2)).check(RB_PATH, host)
    assert not Embedding((2, 0, 1)).check(RB_PATH, host)
    assert not Embedding((0, 0, 2)).check(RB_PATH, host)


@pytest.mark.parametrize("pname", ["rb_path", "red_k3", "t1", "t2", "c4_rbrb", "star_rrb", "with_isolated"])
@pytest.mark.parametrize("hname", ["red_k4", "double_k4", "mixed_k4", "t1", "t2", "double_k3"])
def test_contains_matches_oracle_on_corpus(pname, hname):
    p, h = PATTERNS[pname], TARGETS[hname]
    got = contains_colored(h, p)
    assert (got is not None) == naive_contains(h, p)
    if got is not None:
        assert got.check(p, h)


@settings(max_examples=150, deadline=None)
@given(colored_graphs(min_n=1, max_n=6, density=0.6), colored_graphs(min_n=1, max_n=4, density=0.5))
def test_contains_matches_oracle_random(host, pattern):
    got = contains_colored(host, pattern)
    assert (got is not None) == naive_contains(host, pattern)
    if got is not None:
        assert got.check(pattern, host)


@settings(max_examples=60, deadline=None)
@given(colored_graphs(min_n=1, max_n=5), st.data())
def test_containment_invariant_under_relabelling(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = g.relabel(list(perm))
    assert contains_colored(h, g) is not None
    assert contains_colored(g, h) is not None


# -- homomorphism --------------------------------------------------------------


def test_c5_maps_to_t2():
    w = hom_exists(C5, T2)
    assert w is not None and w.check(C5, T2)
    assert naive_hom(C5, T2)


def test_red_k3_does_not_map_to_edge():
    assert hom_exists(RED_K3, G(2, [(0, 1, R)])) is None


def test_hom_witness_check_rejects_collapsed_edges():
    assert not HomWitness((0, 0, 1)).check(RB_PATH, T2)


@settings(max_examples=150, deadline=None)
@given(colored_graphs(min_n=1, max_n=6, density=0.5), colored_graphs(min_n=1, max_n=4, density=0.7))
def test_hom_matches_oracle_random(pattern, target):
    got = hom_exists(pattern, target)
    assert (got is not None) == naive_hom(pattern, target)
    if got is not None:
        assert got.check(pattern, target)


@settings(max_examples=60, deadline=None)
@given(colored_graphs(min_n=1, max_n=5, density=0.7))
def test_containment_implies_hom(g):
    host = blow_up(g, 1)
    assert host == g
    assert hom_exists(g, g) is not None


# -- blow-up ------------------------------------------------------------------


def test_blow_up_counts():
    b = blow_up(T1, 2)
    assert b.n == 6
    assert b.edge_counts() == (12, 4)
    assert blow_up(T1, 1) == T1


@settings(max_examples=60, deadline=None)
@given(colored_graphs(min_n=1, max_n=4), st.integers(1, 3))
def test_blow_up_scales_edges(g, s):
    b = blow_up(g, s)
    assert b.n == g.n * s
    assert b.edge_counts() == tuple(c * s * s for c in g.edge_counts())
    for v in range(g.n):
        cls = range(v * s, v * s + s)
        assert all(b.mask(a, c) == 0 for a in cls for c in cls if a != c)
