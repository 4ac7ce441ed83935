"""Colored copies, homomorphisms and blow-ups.

A pattern maps homomorphically into a small target exactly when it sits
inside a large enough blow-up of that target. This script shows both sides
for the five-cycle with one blue edge.
"""

from mextremal import blow_up, contains_colored, hom_exists
from mextremal.constructions import cycle_pattern, t1, t2

c5 = cycle_pattern(5, "RRRRB")

for name, target in (("T1", t1()), ("T2", t2())):
    w = hom_exists(c5, target)
    print(f"C5 -> {name}: {'map ' + str(w.mapping) if w else 'no homomorphism'}")
    for s in (1, 2, 3):
        emb = contains_colored(blow_up(target, s), c5)
        print(f"    blow-up s={s} ({target.n * s} vertices): {'copy at ' + str(emb.mapping) if emb else 'no copy'}")
