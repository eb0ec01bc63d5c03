# Signatures, homology groups and cover genera.
#
# Run with:  python demos/01_signature_calculus.py

from riemann_homology import Signature, homology_group, homology_genus, is_homology_signature
from riemann_homology.intlin import IntMatrix, smith_normal_form
from riemann_homology.orbifold import relation_matrix

# %% The relation matrix of (0;2,5,10) and its Smith normal form
sig = Signature([2, 5, 10])
m = relation_matrix(sig)
print(m.to_rows())
snf = smith_normal_form(m)
print("diagonal:", snf.diagonal)
print("group:", homology_group(sig), " genus:", homology_genus(sig))

# %% Maclachlan's condition decides whether the cover is a surface
for orders in [(2, 5, 10), (2, 3, 4), (7, 7, 7), (2, 2, 3, 3)]:
    v = is_homology_signature(Signature(orders))
    if v.maclachlan_ok:
        print(f"{Signature(orders)}: {v.group}, genus {v.cover_genus}")
    else:
        print(f"{Signature(orders)}: drop k_{v.failing_index} = {v.failing_order} and the lcm falls")

# %% Any integer matrix works
print(smith_normal_form(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])).diagonal)
