"""The construction behind the lower bound, at a size one can inspect."""

from mextremal import chromatic_number, contains_colored, reduced_max_matching
from mextremal.constructions import (
    gadget_cyclic3,
    gadget_threshold,
    gadget_union_bound,
    graph_H,
    graph_H_prime,
    lower_bound_family,
    smallest_good_t,
    verify_gadget,
)

F = gadget_cyclic3()
print("3x3 gadget, every 2x2 block sees both colors:", verify_gadget(F, 2).passed)

H = graph_H(2, 2, 3, gadget=F)
Hp = graph_H_prime(H, 1)
print(f"H: {H.n} vertices, chi={chromatic_number(H)};  H': chi={chromatic_number(Hp)}, M={reduced_max_matching(Hp)[0]}")

fam = lower_bound_family(2, 2, 3)
print(f"family (r=2,k=2,m=3): n={fam.n}, color edge counts {fam.graph.edge_counts()}")
for c in (1, 2):
    print(f"  color {c}: complement {fam.complement_count(c)} pairs (closed form {fam.closed_form_complement(c)})")
print("union contains the gadget:", contains_colored(fam.graph, F) is not None)

t = smallest_good_t(2, 2, t_max=1000, consistent=True)
print(f"a random 2-coloring certifiably works for (r,k)=(2,2) once t >= {t}: bound {gadget_union_bound(2, t, gadget_threshold(t, 2, 2)):.3f}")
