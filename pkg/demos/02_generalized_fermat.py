# Generalized Fermat curves: genus, generators, the curve model and the
# orbifold left on a homology cover.

from riemann_homology import FermatType, fermat_genus
from riemann_homology.fermat import (
    curve_model,
    generators,
    homology_cover_construction,
    orbifold_structure,
    permutation_action,
)
from riemann_homology.orbifold import Signature

t = FermatType(5, 3)
print(f"type {t}: genus {fermat_genus(t)}, |A| = {t.group_order}")
print("generators:", [g.coords for g in generators(t)])

# %% A 3-cycle on the branch points acts on Z_5^3
print(permutation_action(t, (2, 3, 1, 4)).mod(5).to_rows())

# %% Fiber-product equations, branch values inf, 0, 1, -1
print(curve_model(t, [-1]).to_text())

# %% Homology cover of (0;2,8,8) built inside Z_8^2
c = homology_cover_construction(Signature([2, 8, 8]))
print("K_A generators:", [v.coords for v in c.k_a_generators], "->", c.quotient)
print(orbifold_structure(Signature([2, 8, 8])))
