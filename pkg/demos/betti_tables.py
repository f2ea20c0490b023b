"""
Betti tables of MCM modules over the cubic cone
===============================================

The Betti numbers of the module attached to an indecomposable bundle are
closed-form in its rank and degree.  There are four shapes: the Atiyah bundles
F_r, their syzygy partners S_l, and the two generic regimes on either side of
the ray 3r = 2d.
"""

from cubicmcm import atiyah, betti_general, betti_table, complete_resolution, generic, special
from cubicmcm.betti import descriptor_syzygy, syzygy_table
from cubicmcm.io import render_resolution_text, render_table_text

for desc in [atiyah(1), special(1), generic(1, 1), generic(3, 5)]:
    print(render_table_text(betti_table(desc), str(desc)))
    print()

###############################################################################
# The tables are 2-periodic up to a twist by 3: beta[i+2, j] = beta[i, j-3].
# The complete resolution of F_1 shows the staircase.

print(render_resolution_text(atiyah(1), 3))
print(complete_resolution(generic(1, 1), 1))

###############################################################################
# Taking syzygies negates the charge.  Reducing it back into the domain swaps
# F <-> S and G <-> H, and the returned shift makes the tables match exactly.

for desc in [atiyah(2), generic(1, 1), generic(2, 1)]:
    image, s = descriptor_syzygy(desc)
    same = syzygy_table(betti_table(desc)) == betti_table(image).shifted(s)
    print(f"syz {desc} = {image} twisted by {s}: tables agree {same}")

###############################################################################
# Charges outside the domain are reduced first; the shift says how the
# internal degrees move.

table, shift = betti_general((0, 1))
print("charge (0,1):", table, "shift", shift)
