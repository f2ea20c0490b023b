"""
Charges and the fundamental domain
==================================

Every indecomposable object on the cubic has a charge (rank, degree).  The
twist functor acts on charges through an order-3 matrix, and each orbit of a
nonzero charge meets the fundamental domain ``r > 0, 0 <= d < 3r`` exactly once.
"""

from cubicmcm import SIGMA, euler_form, in_domain3, orbit_V, reduce3, reduce6, sigma_power

# The action of the twist on the lattice
print("sigma =", tuple(SIGMA), " det =", SIGMA.det)
print("sigma^3 (7,-5) =", sigma_power(3, (7, -5)))

# The Euler form is preserved by the twist
c1, c2 = (2, 3), (1, 0)
print("<c1, c2> =", euler_form(c1, c2),
      " after twisting:", euler_form(sigma_power(1, c1), sigma_power(1, c2)))

###############################################################################
# Reduction into the domain.  ``k`` counts how many twists were needed.

for c in [(0, 1), (1, 3), (-4, 7), (5, -2)]:
    k, rep = reduce3(c)
    print(f"{c} -> k={k}, {rep}  in domain: {in_domain3(rep)}")

# With -sigma (order 6) the domain halves to 3r > 2d >= 0
print("reduce6 (2,3):", reduce6((2, 3)))

###############################################################################
# The orbit of O[1] under the twist: sheaf charge and cohomological shift.

for j in range(-1, 6):
    print(f"V_{j} =", orbit_V(j))
