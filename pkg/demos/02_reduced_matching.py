"""Chromatic partitions, quotients and the reduced maximum matching."""

from mextremal import chromatic_number, enumerate_proper_partitions, quotient, reduced_max_matching
from mextremal.constructions import cycle_pattern
from mextremal.graphcore import ColoredMultigraph

c5 = cycle_pattern(5, "RRRRB")
chi = chromatic_number(c5)
print(f"C5(RRRRB): chi = {chi}")
for p in enumerate_proper_partitions(c5, chi):
    rg = quotient(c5, p)
    sets = {pair: "".join("RB"[c - 1] for c in sorted(cs)) for pair, cs in sorted(rg.colorsets.items())}
    print(f"  {p.classes}: {sets}")

M, (p, mr) = reduced_max_matching(c5)
print(f"M = {M}, witnessed by {p.classes} matching {mr.edges}")

# a clique with all four red: every chi-partition is the singleton one
k4 = ColoredMultigraph.from_edges(4, 2, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])
print("M(red K4) =", reduced_max_matching(k4)[0])
