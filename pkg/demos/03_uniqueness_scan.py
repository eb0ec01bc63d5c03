# Two generalized Fermat types of equal genus, and why they cannot share a surface.

from riemann_homology.uniqueness import coexistence_check, diophantine_check, genus_collision_scan
from riemann_homology import FermatType

report = coexistence_check(FermatType(6, 2), FermatType(3, 3))
print(f"genus {report.genus_a}; feasible: {report.feasible_overall}")
for v in report.case_verdicts:
    print(f"  {v.label:>2} {v.roles:<16} {v.reason}")

# %% Every same-genus pair in a box
for r in genus_collision_scan(12, 10):
    print(r.type_a, r.type_b, "genus", r.genus_a, "feasible" if r.feasible_overall else "ruled out")

# %% The two exponential equations left over in one sub-case
for e in diophantine_check(1000).equations:
    print(e.name, "solutions:", list(e.solutions), "crossover:", e.crossover)
