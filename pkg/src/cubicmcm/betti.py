"""Betti tables, complete resolutions and Hilbert data of indecomposable MCM
modules over the homogeneous coordinate ring of a smooth plane cubic.

Every module is described by the charge ``(r, d)`` of the corresponding object
on the elliptic curve.  After reduction to the fundamental domain
``r > 0, 0 <= d < 3r`` the Betti numbers are closed-form in ``(r, d)``, except
on the rays ``d = 0`` and ``3r = 2d`` where an extra discrete flag (the
:class:`Variant`) distinguishes the Atiyah bundles ``F_r`` and their syzygy
partners ``S_l`` from the generic bundles.

Betti numbers are 2-periodic up to a twist: ``beta[i+2, j] == beta[i, j-3]``.
"""

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .charge_lattice import Charge, in_domain3, reduce3
from .errors import (
    InternalError,
    InvalidBundleError,
    InvalidDescriptorError,
    VariantMismatchError,
)


class Variant(enum.Enum):
    GENERIC = "generic"
    ATIYAH = "atiyah"
    SPECIAL = "special"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.lower())
        except ValueError:
            raise InvalidDescriptorError(
                f"unknown variant {text!r} (expected generic, atiyah or special)") from None


@dataclass(frozen=True)
class ObjectDescriptor:
    charge: Charge
    variant: Variant = Variant.GENERIC
    # point of the curve for the continuous families; never interpreted
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "charge", Charge(*self.charge))
        check_descriptor(self.charge, self.variant)

    @property
    def r(self):
        return self.charge.r

    @property
    def d(self):
        return self.charge.d

    @property
    def family(self):
        """Name of the complete-resolution family: F, S, G or H."""
        if self.variant is Variant.ATIYAH:
            return "F"
        if self.variant is Variant.SPECIAL:
            return "S"
        return "G" if 3 * self.r - 2 * self.d > 0 else "H"

    def __str__(self):
        r, d = self.charge
        if self.variant is Variant.ATIYAH:
            return f"F_{r}"
        if self.variant is Variant.SPECIAL:
            return f"S_{r // 2}"
        lam = self.label or "lambda"
        return f"{self.family}_{lam}({r},{d})"


def check_descriptor(charge, variant):
    if not in_domain3(charge):
        raise InvalidDescriptorError(f"charge {charge} is outside the fundamental domain")
    r, d = charge
    if variant is Variant.ATIYAH and d != 0:
        raise VariantMismatchError(f"Atiyah bundles have degree 0, got {charge}")
    if variant is Variant.SPECIAL and 3 * r != 2 * d:
        raise VariantMismatchError(f"the special family lives on 3r = 2d, got {charge}")


def atiyah(r, label=None):
    return ObjectDescriptor(Charge(r, 0), Variant.ATIYAH, label)


def special(l, label=None):
    return ObjectDescriptor(Charge(2 * l, 3 * l), Variant.SPECIAL, label)


def generic(r, d, label=None):
    return ObjectDescriptor(Charge(r, d), Variant.GENERIC, label)


def h0(r, d, is_atiyah=False):
    """dim H^0 of an indecomposable bundle of rank ``r`` and degree ``d``."""
    if r < 1:
        raise InvalidBundleError(f"rank must be positive, got {r}")
    if is_atiyah and d != 0:
        raise InvalidBundleError("Atiyah bundles have degree 0")
    if d < 0:
        return 0
    if d == 0:
        return 1 if is_atiyah else 0
    return d


def h1(r, d, is_atiyah=False):
    # Serre duality; the dual of F_r is F_r
    return h0(r, -d, is_atiyah)


# (i, j) positions the closed forms can populate
WINDOW = ((0, -1), (0, 0), (0, 1), (1, 1), (1, 2), (1, 3))


class BettiTable:
    """Betti numbers ``beta[i, j]`` for ``i in (0, 1)``; other ``i`` by periodicity."""

    __slots__ = ("window",)

    def __init__(self, window):
        clean = {}
        for (i, j), v in dict(window).items():
            if i not in (0, 1):
                raise ValueError("only homological degrees 0 and 1 are stored")
            if v < 0:
                raise ValueError("Betti numbers are nonnegative")
            if v:
                clean[(i, j)] = v
        self.window = dict(sorted(clean.items()))

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.window == other.window

    def __hash__(self):
        return hash(tuple(self.window.items()))

    def __repr__(self):
        return f"BettiTable({self.window})"

    def at(self, i, j):
        q, i0 = divmod(i, 2)
        return self.window.get((i0, j - 3 * q), 0)

    def shifted(self, s):
        """Table ``T'`` with ``T'.at(i, j) == self.at(i, j - s)``."""
        return BettiTable({(i, j + s): v for (i, j), v in self.window.items()})

    def generators(self):
        return Counter({j: v for (i, j), v in self.window.items() if i == 0})

    def relations(self):
        return Counter({j: v for (i, j), v in self.window.items() if i == 1})

    def total(self, i):
        q, i0 = divmod(i, 2)
        return sum(v for (k, _), v in self.window.items() if k == i0)

    def degree_range(self):
        js = [j for _, j in self.window]
        return (min(js), max(js)) if js else (0, 0)


def betti_at(table, i, j):
    return table.at(i, j)


def shift_between(source, target):
    """The ``s`` with ``target == source.shifted(s)``, or None.

    Only window-level comparison is made; tables agreeing after a homological
    re-indexing are not matched.
    """
    if not source.window or not target.window:
        return 0 if source == target else None
    s = min(j for _, j in target.window) - min(j for _, j in source.window)
    return s if source.shifted(s) == target else None


def betti_table(desc):
    """Betti numbers in homological degrees 0 and 1 for a fundamental-domain object."""
    if not isinstance(desc, ObjectDescriptor):
        raise InvalidDescriptorError(f"expected an ObjectDescriptor, got {desc!r}")
    r, d = desc.charge
    atiyah_ = desc.variant is Variant.ATIYAH
    special_ = desc.variant is Variant.SPECIAL
    b00 = 1 if atiyah_ else d
    if special_:
        b01 = b11 = 1
    else:
        b01 = max(3 * r - 2 * d, 0)
        b11 = max(2 * d - 3 * r, 0)
    b12 = 3 * r - d
    b13 = 1 if atiyah_ else 0
    return BettiTable({(0, -1): 0, (0, 0): b00, (0, 1): b01,
                       (1, 1): b11, (1, 2): b12, (1, 3): b13})


def betti_general(charge, variant=Variant.GENERIC):
    """Reduce an arbitrary nonzero charge and return ``(table, shift)``.

    With ``(k, c') = reduce3(charge)`` the object is ``sigma^-k`` of the
    domain object of charge ``c'``; since sigma realizes the twist ``(1)``,
    its module has ``beta[i, j] == table.at(i, j - k)``.  The convention
    identifies an object with its ``sigma^3 = [2]`` translate, so the shift is
    only meaningful modulo this choice of representative.
    """
    k, reduced = reduce3(charge)
    try:
        desc = ObjectDescriptor(reduced, variant)
    except VariantMismatchError as exc:
        raise VariantMismatchError(f"{charge} reduces to {reduced}: {exc}") from None
    return betti_table(desc), k


def complete_resolution(desc, steps):
    """Graded free modules of the complete resolution at positions ``-steps..steps``.

    Returns a list of ``(i, Counter{j: multiplicity})``; position ``i`` is the
    free module ``sum R(-j)^beta[i, j]``.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    table = betti_table(desc)
    lo, hi = table.degree_range()
    out = []
    for i in range(-steps, steps + 1):
        q = i // 2
        degrees = Counter()
        for j in range(lo + 3 * q, hi + 3 * q + 1):
            v = table.at(i, j)
            if v:
                degrees[j] = v
        out.append((i, degrees))
    return out


def descriptor_syzygy(desc):
    """Descriptor of the first syzygy module and the internal shift ``s`` with
    ``syz.at(i, j) == betti_table(desc').at(i, j - s)``.

    Syzygy negates the charge; reducing back into the domain swaps the
    families F <-> S and G <-> H and keeps the label.
    """
    k, reduced = reduce3(-desc.charge)
    variant = {Variant.ATIYAH: Variant.SPECIAL,
               Variant.SPECIAL: Variant.ATIYAH}.get(desc.variant, Variant.GENERIC)
    image = ObjectDescriptor(reduced, variant, desc.label)
    return image, k


def syzygy_table(table):
    """Betti table of the first syzygy, read off the periodic extension."""
    return BettiTable({(i, j): table.at(i + 1, j)
                       for i in (0, 1)
                       for j in range(table.degree_range()[0] - 3, table.degree_range()[1] + 4)})


@dataclass(frozen=True)
class HilbertData:
    # integer Laurent polynomials as {exponent: coefficient}
    B: dict
    P: dict
    e: int
    mu: int
    rank: int

    def P_text(self):
        return laurent_text(self.P)

    def B_text(self):
        return laurent_text(self.B)


def laurent_text(poly, var="t"):
    parts = []
    for k in sorted(poly):
        c = poly[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts) or "0"


def _divide_by_one_minus_t(b):
    """Exact quotient of a Laurent polynomial by ``1 - t``."""
    if not b:
        return {}
    lo, hi = min(b), max(b)
    q = {}
    running = 0
    # b = (1 - t) q  =>  q_k = b_lo + ... + b_k
    for k in range(lo, hi + 1):
        running += b.get(k, 0)
        if k < hi:
            q[k] = running
    if running != 0:
        raise InternalError("B(1) != 0, Hilbert numerator not divisible by 1 - t")
    return {k: v for k, v in q.items() if v}


def hilbert_data(desc):
    table = betti_table(desc) if isinstance(desc, ObjectDescriptor) else desc
    B = Counter()
    for (i, j), v in table.window.items():
        B[j] += v if i == 0 else -v
    B = {k: v for k, v in sorted(B.items()) if v}
    P = _divide_by_one_minus_t(B)
    e = sum(P.values())
    mu = table.total(0)
    if e % 3:
        raise InternalError(f"multiplicity {e} is not divisible by 3")
    return HilbertData(B, P, e, mu, e // 3)


def hilbert_coefficients(desc, n):
    """``dim M_k`` for ``k = 0..n`` from ``H_M = P(t) / (1 - t)^2``."""
    P = hilbert_data(desc).P
    return [sum(c * (k - e + 1) for e, c in P.items() if k - e >= 0)
            for k in range(n + 1)]


def is_ulrich(desc_or_charge, variant=Variant.GENERIC):
    """True when the minimal number of generators equals the multiplicity.

    Accepts a descriptor or any nonzero charge (reduced into the domain first;
    twisting changes neither invariant).  For a general charge the variant
    refers to the reduced representative, so ``(r, 3r)`` with the Atiyah
    variant is the excluded ``sigma(F_r)``.
    """
    if isinstance(desc_or_charge, ObjectDescriptor):
        desc = desc_or_charge
    else:
        _, reduced = reduce3(desc_or_charge)
        desc = ObjectDescriptor(reduced, variant)
    data = hilbert_data(desc)
    return data.mu == data.e
