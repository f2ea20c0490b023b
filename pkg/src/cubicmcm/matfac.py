"""Matrix factorizations of the Hesse cubic ``x0^3 + x1^3 + x2^3 - 3 psi x0 x1 x2``.

Constructors for the Koszul factorization (tensor products of 1x1 factorizations),
the Moore matrices of a curve point, and two presentations of a degree-one
skyscraper sheaf; plus exact verification of ``A B = B A = f I`` and extraction
of graded Betti data from a factorization.
"""

from collections import Counter
from dataclasses import dataclass, field as dc_field
from itertools import product
from math import gcd
from typing import Optional

from .betti import BettiTable
from .errors import (
    DegeneratePointError,
    DimensionMismatchError,
    FieldMismatchError,
    InconsistentGradingError,
    InflectionPointError,
    InhomogeneousInputError,
    NoSolutionError,
    NotHomogeneousError,
    NotMinimalError,
    NotOnCurveError,
    OrderThreePointError,
    SingularCubicError,
)
from .fields import QQ, PrimeField
from .matrix import PolyMatrix, adjugate, block, grading_infer, kron, solve_linear
from .poly import MultiPoly, polys

X_NAMES = ("x0", "x1", "x2")
XA_NAMES = ("x0", "x1", "x2", "a0", "a1", "a2")


def hesse_polynomial(psi, x0, x1, x2):
    return x0 ** 3 + x1 ** 3 + x2 ** 3 - x0 * x1 * x2 * (3 * psi)


class HesseCubic:
    def __init__(self, psi=0, field=QQ):
        psi = field(psi)
        if psi ** 3 == 1:
            raise SingularCubicError(f"psi = {psi} has psi^3 = 1: the cubic is singular")
        if field.characteristic == 3:
            raise SingularCubicError("the Hesse form needs 3 to be invertible")
        self.field = field
        self.psi = psi
        self.x = polys(field, X_NAMES)
        self.f = hesse_polynomial(psi, *self.x)

    def __repr__(self):
        return f"HesseCubic(psi={self.field.format(self.psi)}, field={self.field!r})"

    def contains(self, point):
        return self.f.eval(point) == 0

    def point(self, *coords):
        """A :class:`CurvePoint` on this cubic; raises if off the curve."""
        pt = tuple(self.field(c) for c in coords)
        if len(pt) != 3 or all(c == 0 for c in pt):
            raise DegeneratePointError(f"{coords} is not a projective point")
        if not self.contains(pt):
            raise NotOnCurveError(f"{coords} is not on {self}")
        return pt


def hesse(psi=0, field=QQ):
    return HesseCubic(psi, field)


@dataclass
class MatrixFactorization:
    f: MultiPoly
    A: PolyMatrix
    B: PolyMatrix
    row_degrees: Optional[tuple] = None
    col_degrees: Optional[tuple] = None
    note: str = ""

    def __post_init__(self):
        if self.A.shape != self.B.shape or self.A.nrows != self.A.ncols:
            raise DimensionMismatchError("A and B must be square of the same size")
        if self.A.field != self.B.field or self.f.field != self.A.field:
            raise FieldMismatchError("f, A and B must share one field")
        if self.row_degrees is None and self.col_degrees is None:
            try:
                self.row_degrees, self.col_degrees = grading_infer(self.A)
            except (NotHomogeneousError, InconsistentGradingError):
                pass

    @property
    def size(self):
        return self.A.nrows

    @property
    def field(self):
        return self.A.field

    def swapped(self):
        return MatrixFactorization(self.f, self.B, self.A, note=self.note)


@dataclass
class MFReport:
    ab: bool
    ba: bool
    f_homogeneous: bool
    grading: bool
    minimal: bool
    problems: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return self.ab and self.ba and self.f_homogeneous and self.grading and self.minimal

    def lines(self):
        return [f"{name}: {'ok' if getattr(self, name) else 'FAILED'}"
                for name in ("ab", "ba", "f_homogeneous", "grading", "minimal")]


def _has_units(m):
    return any(not e.is_zero() and e.degree() == 0 for row in m for e in row)


def verify_mf(mf):
    """Check the defining identities and the graded structure of a factorization."""
    problems = []
    n = mf.size
    target = PolyMatrix.scalar(n, mf.f)
    ab = (mf.A @ mf.B) == target
    ba = (mf.B @ mf.A) == target
    if not ab:
        problems.append("A*B != f*I")
    if not ba:
        problems.append("B*A != f*I")
    f_hom = not mf.f.is_zero() and mf.f.is_homogeneous() and mf.f.degree() >= 1
    if not f_hom:
        problems.append("f is not homogeneous of positive degree")

    grading = False
    rows, cols = mf.row_degrees, mf.col_degrees
    if rows is None or cols is None:
        problems.append("no consistent grading for A")
    elif not mf.A.grading_is_valid(rows, cols):
        problems.append("A is not homogeneous for the given grading")
    elif f_hom:
        # B: sum S(-(row_i + deg f)) -> sum S(-col_j)
        w = mf.f.degree()
        grading = mf.B.grading_is_valid(cols, tuple(r + w for r in rows))
        if not grading:
            problems.append("B is not homogeneous for the grading induced by A")

    minimal = not (_has_units(mf.A) or _has_units(mf.B))
    if not minimal:
        problems.append("a nonzero constant entry makes the factorization non-minimal")
    return MFReport(ab, ba, f_hom, grading, minimal, problems)


def _one_by_one(a, b):
    return MatrixFactorization(a * b, PolyMatrix([[a]]), PolyMatrix([[b]]))


def tensor_mf(m1, m2):
    """Tensor product of two factorizations: a factorization of ``f1 + f2``.

    With ``I`` identities of the right sizes::

        A = [[A1 x I,  I x A2],     B = [[B1 x I, -I x A2],
             [-I x B2, B1 x I]]          [I x B2,  A1 x I]]
    """
    if m1.field != m2.field:
        raise FieldMismatchError(f"{m1.field} vs {m2.field}")
    if m1.f.nvars != m2.f.nvars:
        raise DimensionMismatchError("factorizations over different polynomial rings")
    fld, nv, names = m1.field, m1.f.nvars, m1.f.names
    i1 = PolyMatrix.identity(m1.size, fld, nv, names)
    i2 = PolyMatrix.identity(m2.size, fld, nv, names)
    A = block([[kron(m1.A, i2), kron(i1, m2.A)],
               [-kron(i1, m2.B), kron(m1.B, i2)]])
    B = block([[kron(m1.B, i2), -kron(i1, m2.A)],
               [kron(i1, m2.B), kron(m1.A, i2)]])
    return MatrixFactorization(m1.f + m2.f, A, B)


def koszul_mf(pairs):
    """Koszul factorization ``{a1,b1} x ... x {al,bl}`` of ``sum a_i b_i``."""
    pairs = list(pairs)
    if not pairs:
        raise InhomogeneousInputError("need at least one pair")
    degrees = set()
    for a, b in pairs:
        ab = a * b
        if ab.is_zero():
            degrees.add(None)
        elif not ab.is_homogeneous():
            raise InhomogeneousInputError(f"{a} * {b} is not homogeneous")
        else:
            degrees.add(ab.degree())
    degrees.discard(None)
    if len(degrees) > 1:
        raise InhomogeneousInputError(f"products have different degrees {sorted(degrees)}")
    mf = _one_by_one(*pairs[0])
    for a, b in pairs[1:]:
        mf = tensor_mf(mf, _one_by_one(a, b))
    if mf.f.is_zero():
        raise InhomogeneousInputError("sum a_i b_i is zero")
    return mf


def hesse_koszul_pairs(curve):
    x0, x1, x2 = curve.x
    return [(x0, x0 ** 2), (x1 ** 2, x1), (x2 ** 2 - x0 * x1 * (3 * curve.psi), x2)]


def hesse_koszul_mf(curve):
    """The 4x4 Koszul factorization of the Hesse cubic."""
    mf = koszul_mf(hesse_koszul_pairs(curve))
    mf.note = "Koszul factorization x0*x0^2 + x1^2*x1 + (x2^2 - 3 psi x0 x1)*x2"
    return mf


def _moore_template(a0, a1, a2, x0, x1, x2):
    return PolyMatrix([
        [a0 * x0, a2 * x2, a1 * x1],
        [a2 * x1, a1 * x0, a0 * x2],
        [a1 * x2, a0 * x1, a2 * x0],
    ])


def moore_matrix(a, field=QQ):
    """The 3x3 Moore matrix of the point ``a`` (linear forms in x0, x1, x2)."""
    x = polys(field, X_NAMES)
    return _moore_template(*(field(c) for c in a), *x)


def moore_matrix_symbolic(field=QQ):
    """Moore matrix with ``a0, a1, a2`` as extra indeterminates (6 variables)."""
    return _moore_template(*polys(field, XA_NAMES)[3:], *polys(field, XA_NAMES)[:3])


def _check_point(curve, a):
    a = tuple(curve.field(c) for c in a)
    if len(a) != 3 or all(c == 0 for c in a):
        raise DegeneratePointError(f"{a} is not a projective point")
    if not curve.contains(a):
        raise NotOnCurveError(f"{tuple(curve.field.format(c) for c in a)} is not on {curve}")
    return a


def moore_mf(curve, a):
    """Rank-one factorization ``(A, adj(A) / (a0 a1 a2))`` from a Moore matrix."""
    a = _check_point(curve, a)
    c = a[0] * a[1] * a[2]
    if c == 0:
        raise OrderThreePointError("Moore factorizations need a0*a1*a2 != 0")
    A = moore_matrix(a, curve.field)
    B = adjugate(A).map(lambda e: e / c)
    return MatrixFactorization(curve.f, A, B, note="Moore matrix factorization")


def _line_minors(a, x):
    """Minors of [[a0,a1,a2],[x0,x1,x2]] as (l, coefficient vector) in fixed order."""
    (a0, a1, a2), (x0, x1, x2) = a, x
    return [
        (x2 * a1 - x1 * a2, (0, -a2, a1)),
        (x1 * a0 - x0 * a1, (-a1, a0, 0)),
        (x2 * a0 - x0 * a2, (-a2, 0, a0)),
    ]


def _independent(u, v):
    return any(u[i] * v[j] - u[j] * v[i] != 0 for i, j in ((0, 1), (0, 2), (1, 2)))


def _monomials(deg, n=3):
    return sorted((e for e in product(range(deg + 1), repeat=n) if sum(e) == deg),
                  reverse=True)


def skyscraper_lines(curve, a):
    """Two independent linear forms cutting out ``a``, first pair in the order
    (a1 x2 - a2 x1, a0 x1 - a1 x0, a0 x2 - a2 x0)."""
    minors = _line_minors(a, curve.x)
    for i in range(3):
        for j in range(i + 1, 3):
            if _independent(minors[i][1], minors[j][1]):
                return minors[i][0], minors[j][0]
    raise DegeneratePointError(f"no independent pair of lines through {a}")


def skyscraper_mf(curve, a):
    """Factorization ``A = [[l2, f1], [-l1, f2]]`` for ``f = l1 f1 + l2 f2``.

    The quadrics are found by solving a linear system on coefficients.
    """
    a = tuple(curve.field(c) for c in a)
    if len(a) != 3 or all(c == 0 for c in a):
        raise DegeneratePointError(f"{a} is not a projective point")
    l1, l2 = skyscraper_lines(curve, a)
    quads = _monomials(2)
    cubics = _monomials(3)
    fld = curve.field
    x = curve.x

    def mono(e):
        return x[0] ** e[0] * x[1] ** e[1] * x[2] ** e[2]

    columns = [l1 * mono(q) for q in quads] + [l2 * mono(q) for q in quads]
    matrix = [[col.coefficient(c) for col in columns] for c in cubics]
    rhs = [curve.f.coefficient(c) for c in cubics]
    try:
        sol = solve_linear(matrix, rhs, fld)
    except NoSolutionError:
        raise NotOnCurveError(f"{a} is not on {curve}") from None
    zero = MultiPoly.zero(fld, 3, X_NAMES)
    f1 = sum((mono(q) * s for q, s in zip(quads, sol[:6])), zero)
    f2 = sum((mono(q) * s for q, s in zip(quads, sol[6:])), zero)
    A = PolyMatrix([[l2, f1], [-l1, f2]])
    B = PolyMatrix([[f2, -f1], [l1, l2]])
    return MatrixFactorization(curve.f, A, B, note="skyscraper factorization via f = l1 f1 + l2 f2")


def skyscraper_explicit_matrix(a, field=QQ, names=X_NAMES):
    """The closed-form 2x2 skyscraper matrix; ``a`` may be scalars or polynomials."""
    x0, x1, x2 = polys(field, names)[:3]
    if all(isinstance(c, MultiPoly) for c in a):
        a0, a1, a2 = a
    else:
        a0, a1, a2 = (field(c) for c in a)
    return PolyMatrix([
        [x2 * a1 - x1 * a2, x1 * a0 - x0 * a1],
        [x0 ** 2 * (a0 * a2) + x0 * x2 * a0 ** 2 - x1 * x2 * a1 ** 2 - x2 ** 2 * a2 ** 2,
         x0 * x2 * a2 ** 2 + x2 ** 2 * (a0 * a2) - x0 ** 2 * a0 ** 2 - x1 ** 2 * (a0 * a1)],
    ])


def skyscraper_explicit_symbolic(field=QQ):
    gens = polys(field, XA_NAMES)
    return skyscraper_explicit_matrix(gens[3:], field, XA_NAMES)


def skyscraper_explicit(curve, a):
    """Closed-form skyscraper factorization, valid when ``a0 a1 a2 != 0``.

    ``B = adj(A) / (a0 a1 a2)``, since ``det A = a0 a1 a2 f`` on the curve.
    """
    a = _check_point(curve, a)
    c = a[0] * a[1] * a[2]
    if c == 0:
        raise InflectionPointError("the closed form needs a0*a1*a2 != 0")
    A = skyscraper_explicit_matrix(a, curve.field)
    B = adjugate(A).map(lambda e: e / c)
    return MatrixFactorization(curve.f, A, B, note="explicit skyscraper factorization")


def betti_from_mf(mf, side="A"):
    """Betti window of ``coker`` of the chosen matrix, generators starting in degree 0.

    Generators sit in the row degrees and first syzygies in the column degrees.
    """
    side = side.upper()
    if side not in ("A", "B"):
        raise ValueError("side must be 'A' or 'B'")
    m = mf.A if side == "A" else mf.B
    if _has_units(mf.A) or _has_units(mf.B):
        raise NotMinimalError("factorization has constant entries")
    rows, cols = grading_infer(m)
    base = min(rows)
    window = Counter()
    for r in rows:
        window[(0, r - base)] += 1
    for c in cols:
        window[(1, c - base)] += 1
    return BettiTable(window)


def point_search(curve, require_nonzero_coords=False):
    """All points of the cubic over a prime field, first nonzero coordinate 1."""
    fld = curve.field
    if not isinstance(fld, PrimeField):
        raise TypeError("point enumeration needs a prime field")
    els = fld.elements()
    one, zero = fld(1), fld(0)
    candidates = [(one, y, z) for y in els for z in els]
    candidates += [(zero, one, z) for z in els]
    candidates.append((zero, zero, one))
    pts = [p for p in candidates if curve.contains(p)]
    if require_nonzero_coords:
        pts = [p for p in pts if all(c != 0 for c in p)]
    return pts


def rational_point_search(curve, bound, require_nonzero_coords=False):
    """Primitive integer points with coordinates in ``[-bound, bound]``, sign-normalized."""
    if curve.field != QQ:
        raise TypeError("rational point search needs the rational field")
    found = []
    rng = range(-bound, bound + 1)
    for p in product(rng, rng, rng):
        if p == (0, 0, 0) or gcd(gcd(p[0], p[1]), p[2]) != 1:
            continue
        if next(c for c in p if c != 0) < 0:
            continue
        if require_nonzero_coords and 0 in p:
            continue
        if curve.contains(p):
            found.append(tuple(QQ(c) for c in p))
    found.sort(key=lambda p: (sum(abs(c) for c in p), p))
    return found
