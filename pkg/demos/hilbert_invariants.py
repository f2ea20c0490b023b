"""
Hilbert series and numerical invariants
=======================================

The Hilbert series of a module is P(t) / (1 - t)^2, where the numerator P is read
off the Betti table.  From it we get the multiplicity e = P(1), the module rank
e/3 and the number of generators mu.  Ulrich modules are those with mu = e.
"""

from cubicmcm import (
    Variant, atiyah, generic, h0, hilbert_coefficients, hilbert_data, is_ulrich, special,
)

print(f"{'module':<14}{'P(t)':<18}{'e':>4}{'mu':>4}{'rank':>6}  ulrich")
for desc in [atiyah(1), atiyah(2), special(1), special(2), generic(1, 0), generic(1, 1),
             generic(2, 1), generic(3, 5)]:
    h = hilbert_data(desc)
    print(f"{str(desc):<14}{h.P_text():<18}{h.e:>4}{h.mu:>4}{h.rank:>6}  {is_ulrich(desc)}")

###############################################################################
# Graded pieces of the module agree with global sections of the bundle and its
# twists, as long as the bundle has positive degree and lies before the ray.

r, d = 2, 1
print("dim M_k   :", hilbert_coefficients(generic(r, d), 6))
print("h0(F(k))  :", [h0(r, d + 3 * r * k) for k in range(7)])

###############################################################################
# Ulrich modules generated in degree 0 come from bundles with d = 3r, except
# the twist of the Atiyah bundle.

print("(2,6) generic :", is_ulrich((2, 6)))
print("(2,6) atiyah  :", is_ulrich((2, 6), Variant.ATIYAH))
