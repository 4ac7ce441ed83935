"""Exact extremal numbers by exhaustive search.

mex(r, n, H) is the largest T such that r graphs on the same n vertices,
each with at least T edges, have a colored union free of H.
"""

import time

from mextremal import max_edges_avoiding, mex_exact
from mextremal.constructions import cycle_pattern, path_pattern, t1, t2
from mextremal.formats import serialize_text

rb = path_pattern("RB")
red_k3 = cycle_pattern(3, "RRR")

for n in range(3, 7):
    t0 = time.perf_counter()
    res = mex_exact(n, 2, [rb])
    print(f"mex(2,{n},RB path) = {res.value}   [{res.nodes_explored} nodes, {time.perf_counter() - t0:.2f}s]")
print()
print("witness at n=6:")
print(serialize_text(mex_exact(6, 2, [rb]).witness))

print("mex(2,5,red K3) =", mex_exact(5, 2, [red_k3]).value)

# the union of the two graphs avoids T1 and T2: then it has at most n^2/2 edges
for n in range(3, 6):
    res = max_edges_avoiding(n, 2, [t1(), t2()])
    print(f"n={n}: max edges avoiding T1, T2 = {res.value} (n^2/2 = {n * n / 2})")
