"""The numerical lattice K0(E)/rad = Z^2 of an elliptic curve.

A class is recorded by its charge ``(r, d) = (rank, degree)``.  The structure
sheaf has charge ``(1, 0)`` and a skyscraper sheaf of length one has ``(0, 1)``.

The internal degree shift ``(1)`` of graded MCM modules over the cubic cone acts
on charges by the matrix ``SIGMA = B^3 A``, which has order 3.
"""

from typing import NamedTuple

from .errors import InternalError, ZeroChargeError


class Charge(NamedTuple):
    r: int
    d: int

    def __neg__(self):
        return Charge(-self.r, -self.d)

    def __str__(self):
        return f"({self.r},{self.d})"


class LatticeAuto(NamedTuple):
    m00: int
    m01: int
    m10: int
    m11: int

    @property
    def det(self):
        return self.m00 * self.m11 - self.m01 * self.m10

    def __matmul__(self, other):
        return LatticeAuto(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def __neg__(self):
        return LatticeAuto(-self.m00, -self.m01, -self.m10, -self.m11)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = IDENTITY
        for _ in range(k):
            result = result @ self
        return result

    def inverse(self):
        if self.det != 1:
            raise ValueError("only SL2(Z) elements are supported")
        return LatticeAuto(self.m11, -self.m01, -self.m10, self.m00)


IDENTITY = LatticeAuto(1, 0, 0, 1)
# twist by the structure sheaf
A = LatticeAuto(1, -1, 0, 1)
# tensoring with O(x)
B = LatticeAuto(1, 0, 1, 1)
SIGMA = B @ B @ B @ A
SIGMA_INV = SIGMA @ SIGMA
MINUS_SIGMA = -SIGMA


def euler_form(c1, c2):
    """Skew-symmetric Euler pairing ``<c1, c2> = r1*d2 - d1*r2``."""
    return c1[0] * c2[1] - c1[1] * c2[0]


def apply_auto(m, c):
    r, d = c
    return Charge(m.m00 * r + m.m01 * d, m.m10 * r + m.m11 * d)


def sigma_power(k, c):
    """Apply ``SIGMA**k`` to ``c``; negative ``k`` is fine since SIGMA has order 3."""
    c = Charge(*c)
    for _ in range(k % 3):
        c = apply_auto(SIGMA, c)
    return c


def in_domain3(c):
    r, d = c
    return r > 0 and 0 <= d < 3 * r


def in_domain6(c):
    r, d = c
    return r > 0 and d >= 0 and 3 * r > 2 * d


def _reduce(c, gen, order, inside):
    c = Charge(*c)
    if c == (0, 0):
        raise ZeroChargeError("the zero charge is the radical class and has no representative")
    hits = []
    image = c
    for k in range(order):
        if inside(image):
            hits.append((k, image))
        image = apply_auto(gen, image)
    if image != c:
        raise InternalError(f"generator does not have order {order}")
    if len(hits) != 1:
        raise InternalError(f"{len(hits)} representatives found for {c}")
    return hits[0]


def reduce3(c):
    """Return ``(k, c')`` with ``k`` in {0,1,2} and ``c' = SIGMA**k c`` in the fundamental domain."""
    return _reduce(c, SIGMA, 3, in_domain3)


def reduce6(c):
    """Same as :func:`reduce3` for the order-6 group generated by ``-SIGMA``."""
    return _reduce(c, MINUS_SIGMA, 6, in_domain6)


# V_j = sigma^j(O[1]) for j = 0, 1, 2: (charge of the sheaf, cohomological shift)
_V_BASE = (
    (Charge(1, 0), 1),  # O[1]
    (Charge(1, 3), 1),  # O(3x)[1]
    (Charge(2, 3), 2),  # K'[2], K' = restricted twisted cotangent bundle
)


def orbit_V(j):
    """Charge of the sheaf underlying ``V_j`` and its cohomological shift.

    ``V_{3i+j} = V_j[2i]``.
    """
    i, j0 = divmod(j, 3)
    charge, shift = _V_BASE[j0]
    return charge, shift + 2 * i
