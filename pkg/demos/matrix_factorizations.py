"""
Matrix factorizations of the Hesse cubic
========================================

An MCM module over k[x0,x1,x2]/(f) is the cokernel of one half of a matrix
factorization A B = B A = f I.  We build the Koszul factorization, the Moore
matrices of a curve point and two presentations of a skyscraper sheaf, check
them exactly, and read Betti tables off their gradings.
"""

from cubicmcm import GF, QQ, betti_from_mf, betti_table, hesse, hesse_koszul_mf, verify_mf
from cubicmcm import atiyah, generic, moore_mf, point_search, skyscraper_explicit, skyscraper_mf
from cubicmcm.io import decode_mf, encode_mf
from cubicmcm.matfac import moore_matrix_symbolic, rational_point_search
from cubicmcm.matrix import determinant

curve = hesse(2, QQ)
print(curve, " f =", curve.f.to_text())

###############################################################################
# Koszul: a tensor product of three 1x1 factorizations.

koszul = hesse_koszul_mf(curve)
print(koszul.A)
print("verified:", verify_mf(koszul).ok)
print("coker B is F_1:", betti_from_mf(koszul, "B") == betti_table(atiyah(1)))

###############################################################################
# Moore matrices need a point with no zero coordinate.  On this curve (1,2,3)
# works; over GF(7) every point of every smooth Hesse cubic has a zero
# coordinate, so we use GF(13).

print("points over Q:", rational_point_search(curve, 3, True))
moore = moore_mf(curve, (1, 2, 3))
print("Moore verified:", verify_mf(moore).ok)
print("det of the symbolic Moore matrix:", determinant(moore_matrix_symbolic()).to_text())

curve13 = hesse(2, GF(13))
pts = point_search(curve13, True)
print("GF(13) points with a0a1a2 != 0:", pts)
print("Moore over GF(13) verified:", verify_mf(moore_mf(curve13, pts[0])).ok)

###############################################################################
# Skyscraper sheaves: the general construction works at every point, the
# closed form only away from the flexes.

sky = skyscraper_mf(hesse(0, QQ), (0, -1, 1))
print(sky.A)
print("coker B is G(1,1):", betti_from_mf(sky, "B") == betti_table(generic(1, 1)))
print("explicit verified:", verify_mf(skyscraper_explicit(curve, (1, 2, 3))).ok)

###############################################################################
# Documents are canonical JSON and round-trip byte for byte.

text = encode_mf(koszul, curve.psi)
print("round trip exact:", encode_mf(decode_mf(text).mf, curve.psi) == text)
