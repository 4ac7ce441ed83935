"""Named small graphs shared by the test modules."""

from mextremal.constructions import cycle_pattern, path_pattern, t1, t2
from mextremal.graphcore import ColoredMultigraph

R, B = 1, 2


def G(n, triples, r=2):
    return ColoredMultigraph.from_edges(n, r, triples)


def clique(k, colors=(R,), r=2):
    return G(k, [(u, v, c) for u in range(k) for v in range(u + 1, k) for c in colors], r)


RB_PATH = path_pattern("RB")
RED_EDGE = G(2, [(0, 1, R)])
RED_K3 = clique(3)
BLUE_K3 = clique(3, (B,))
DOUBLE_K3 = clique(3, (R, B))
C5 = cycle_pattern(5, "RRRRB")
T1 = t1()
T2 = t2()

# patterns with at most 6 vertices
PATTERNS = {
    "red_edge": RED_EDGE,
    "double_edge": G(2, [(0, 1, R), (0, 1, B)]),
    "rb_path": RB_PATH,
    "rr_path": path_pattern("RR"),
    "red_k3": RED_K3,
    "double_k3": DOUBLE_K3,
    "t1": T1,
    "t2": T2,
    "c4_rbrb": cycle_pattern(4, "RBRB"),
    "c4_rrrr": cycle_pattern(4, "RRRR"),
    "c5": C5,
    "c5_rrbrb": cycle_pattern(5, "RRBRB"),
    "red_k4": clique(4),
    "star_rrb": G(4, [(0, 1, R), (0, 2, R), (0, 3, B)]),
    "k23_mixed": G(5, [(0, 2, R), (0, 3, B), (0, 4, R), (1, 2, B), (1, 3, R), (1, 4, B)]),
    "c6_rbrbrb": cycle_pattern(6, "RBRBRB"),
    "with_isolated": G(4, [(0, 1, R), (1, 2, B)]),
}

# targets with at most 4 vertices
TARGETS = {
    "red_edge": RED_EDGE,
    "double_edge": G(2, [(0, 1, R), (0, 1, B)]),
    "red_k3": RED_K3,
    "blue_k3": BLUE_K3,
    "double_k3": DOUBLE_K3,
    "t1": T1,
    "t2": T2,
    "red_k4": clique(4),
    "double_k4": clique(4, (R, B)),
    "mixed_k4": G(4, [(0, 1, R), (0, 1, B), (0, 2, R), (0, 3, B), (1, 2, B), (1, 3, R), (2, 3, R), (2, 3, B)]),
    "rb_path": RB_PATH,
    "empty3": G(3, []),
}
