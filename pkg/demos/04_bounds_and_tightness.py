"""The density upper bounds and how close the construction comes."""

from mextremal import report
from mextremal.bounds import tightness_check
from mextremal.constructions import cycle_pattern

rep = report(cycle_pattern(5, "RRRRB"))
print(f"C5(RRRRB): chi={rep.chi} M={rep.M}")
print(f"  trivial upper  {rep.trivial_upper} ~ {float(rep.trivial_upper):.6f}")
print(f"  improved upper {rep.theorem_upper} ~ {float(rep.theorem_upper):.6f}")

print("\n r   k  m   lower        gap / (m/(9rk^2))")
for r in (2, 4):
    for k in (10, 20, 40):
        for m in range(1, k // 10 + 1):
            t = tightness_check(r, k, m)
            print(f"{r:2d} {k:3d} {m:2d}   {float(t.lower):.6f}   {float(t.gap_ratio):8.2f}")
