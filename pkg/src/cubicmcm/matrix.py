"""Polynomial matrices, graded free-module maps and exact linear algebra."""

from collections import deque
from functools import lru_cache

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    InconsistentGradingError,
    NoSolutionError,
    NotHomogeneousError,
    NotSquareError,
)
from .poly import MultiPoly


class PolyMatrix:
    """A rows x cols matrix of :class:`MultiPoly` entries over one ring.

    ``row_degrees``/``col_degrees`` are optional.  When present, entry
    ``(i, j)`` must be zero or homogeneous of degree ``col_degrees[j] - row_degrees[i]``:
    the matrix is then a degree-zero map from ``sum S(-col_degrees[j])`` to
    ``sum S(-row_degrees[i])``.
    """

    def __init__(self, entries, row_degrees=None, col_degrees=None):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise DimensionMismatchError("empty matrix")
        ncols = len(entries[0])
        if any(len(row) != ncols for row in entries):
            raise DimensionMismatchError("ragged rows")
        first = entries[0][0]
        for row in entries:
            for e in row:
                if e.field != first.field:
                    raise FieldMismatchError("entries over different fields")
                if e.nvars != first.nvars:
                    raise DimensionMismatchError("entries in different rings")
        self.entries = entries
        self.field = first.field
        self.nvars = first.nvars
        self.names = first.names
        self.row_degrees = tuple(row_degrees) if row_degrees is not None else None
        self.col_degrees = tuple(col_degrees) if col_degrees is not None else None
        if self.row_degrees is not None and len(self.row_degrees) != self.nrows:
            raise DimensionMismatchError("row degree vector has the wrong length")
        if self.col_degrees is not None and len(self.col_degrees) != self.ncols:
            raise DimensionMismatchError("column degree vector has the wrong length")

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0])

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __repr__(self):
        rows = ",\n ".join("[" + ", ".join(e.to_text() for e in row) + "]" for row in self.entries)
        return f"PolyMatrix([{rows}])"

    @classmethod
    def identity(cls, n, field, nvars, names=None):
        return cls([[MultiPoly.constant(field, nvars, 1 if i == j else 0, names)
                     for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, n, p):
        """``p * I_n``."""
        zero = MultiPoly.zero(p.field, p.nvars, p.names)
        return cls([[p if i == j else zero for j in range(n)] for i in range(n)])

    def map(self, fn):
        return PolyMatrix([[fn(e) for e in row] for row in self.entries])

    def transpose(self):
        return PolyMatrix([list(col) for col in zip(*self.entries)])

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} + {other.shape}")
        return PolyMatrix([[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda e: -e)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self.map(lambda e: e * c)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def with_grading(self, row_degrees, col_degrees):
        return PolyMatrix(self.entries, row_degrees, col_degrees)

    def grading_is_valid(self, row_degrees=None, col_degrees=None):
        rows = row_degrees if row_degrees is not None else self.row_degrees
        cols = col_degrees if col_degrees is not None else self.col_degrees
        if rows is None or cols is None:
            return False
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                if not e.is_homogeneous() or e.degree() != cols[j] - rows[i]:
                    return False
        return True


def block(blocks):
    """Assemble a matrix from a 2-d list of equally shaped-per-row/col blocks."""
    rows = []
    for block_row in blocks:
        for r in range(block_row[0].nrows):
            rows.append([e for b in block_row for e in b.entries[r]])
    return PolyMatrix(rows)


def kron(m, n):
    """Kronecker product."""
    return PolyMatrix([
        [m[i, j] * n[k, l] for j in range(m.ncols) for l in range(n.ncols)]
        for i in range(m.nrows) for k in range(n.nrows)
    ])


def mat_mul(a, b):
    if a.ncols != b.nrows:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    zero = MultiPoly.zero(a.field, a.nvars, a.names)
    out = []
    for i in range(a.nrows):
        row = []
        for k in range(b.ncols):
            acc = zero
            for j in range(a.ncols):
                x, y = a.entries[i][j], b.entries[j][k]
                if x.terms and y.terms:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    rows = cols = None
    if a.row_degrees is not None and a.col_degrees is not None \
            and b.row_degrees is not None and b.col_degrees is not None:
        # composable when a's source and b's target agree up to one twist
        offsets = {ca - rb for ca, rb in zip(a.col_degrees, b.row_degrees)}
        if len(offsets) == 1:
            (delta,) = offsets
            rows = a.row_degrees
            cols = tuple(c + delta for c in b.col_degrees)
    return PolyMatrix(out, rows, cols)


def _square(m):
    if m.nrows != m.ncols:
        raise NotSquareError(f"matrix of shape {m.shape} is not square")


def _minor_dets(m):
    """Memoized Laplace expansion along rows; returns det(rows k.., given columns)."""
    n = m.nrows
    zero = MultiPoly.zero(m.field, m.nvars, m.names)

    @lru_cache(maxsize=None)
    def det(cols):
        # cols: tuple of remaining column indices; expanding row n - len(cols)
        k = n - len(cols)
        if not cols:
            return MultiPoly.constant(m.field, m.nvars, 1, m.names)
        acc = zero
        for pos, c in enumerate(cols):
            e = m.entries[k][c]
            if e.is_zero():
                continue
            sub = det(cols[:pos] + cols[pos + 1:])
            term = e * sub
            acc = acc - term if pos % 2 else acc + term
        return acc

    return det


def determinant(m):
    """Exact determinant by cofactor expansion (memoized over column subsets)."""
    _square(m)
    return _minor_dets(m)(tuple(range(m.ncols)))


def _drop(m, i, j):
    return PolyMatrix([[e for c, e in enumerate(row) if c != j]
                       for r, row in enumerate(m.entries) if r != i])


def adjugate(m):
    """Transpose of the cofactor matrix, so ``m @ adjugate(m) == det(m) * I``."""
    _square(m)
    n = m.nrows
    if n == 1:
        return PolyMatrix([[MultiPoly.constant(m.field, m.nvars, 1, m.names)]])
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = determinant(_drop(m, i, j))
            adj[j][i] = -cof if (i + j) % 2 else cof
    return PolyMatrix(adj)


def solve_linear(matrix, rhs, field):
    """Solve ``matrix @ x = rhs`` over ``field`` by Gauss-Jordan elimination.

    Pivots are taken column by column, choosing the first row (top-down) with a
    nonzero entry; free variables are set to zero, so the answer is
    deterministic.  Raises :class:`NoSolutionError` for inconsistent systems.
    """
    nrows = len(matrix)
    if len(rhs) != nrows:
        raise DimensionMismatchError("right-hand side length does not match the row count")
    ncols = len(matrix[0]) if nrows else 0
    aug = [[field(v) for v in row] + [field(b)] for row, b in zip(matrix, rhs)]
    if any(len(row) != ncols + 1 for row in aug):
        raise DimensionMismatchError("ragged coefficient matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, nrows) if aug[k][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for k in range(nrows):
            if k != r and aug[k][c] != 0:
                factor = aug[k][c]
                aug[k] = [a - factor * b for a, b in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for k in range(r, nrows):
        if aug[k][ncols] != 0:
            raise NoSolutionError("inconsistent linear system")
    x = [field(0)] * ncols
    for row, c in enumerate(pivots):
        x[c] = aug[row][ncols]
    return x


def grading_infer(m):
    """Recover row/column degree vectors making every entry homogeneous of
    degree ``col[j] - row[i]``.

    Works by propagating constraints over the bipartite graph whose edges are
    the nonzero entries.  Each connected component is normalized so its
    smallest row degree is 0 (a component with no rows gets column degree 0).
    """
    n, k = m.shape
    for row in m.entries:
        for e in row:
            if not e.is_homogeneous():
                raise NotHomogeneousError(f"entry {e} is not homogeneous")
    rows = [None] * n
    cols = [None] * k
    for start in range(n + k):
        node = ("r", start) if start < n else ("c", start - n)
        known = rows if node[0] == "r" else cols
        if known[node[1]] is not None:
            continue
        known[node[1]] = 0
        component = [node]
        queue = deque([node])
        while queue:
            side, idx = queue.popleft()
            if side == "r":
                for j in range(k):
                    e = m.entries[idx][j]
                    if e.is_zero():
                        continue
                    want = rows[idx] + e.degree()
                    if cols[j] is None:
                        cols[j] = want
                        component.append(("c", j))
                        queue.append(("c", j))
                    elif cols[j] != want:
                        raise InconsistentGradingError(f"conflicting degree for column {j}")
            else:
                for i in range(n):
                    e = m.entries[i][idx]
                    if e.is_zero():
                        continue
                    want = cols[idx] - e.degree()
                    if rows[i] is None:
                        rows[i] = want
                        component.append(("r", i))
                        queue.append(("r", i))
                    elif rows[i] != want:
                        raise InconsistentGradingError(f"conflicting degree for row {i}")
        row_members = [idx for side, idx in component if side == "r"]
        if row_members:
            base = min(rows[i] for i in row_members)
        else:
            base = min(cols[j] for side, j in component)
        for side, idx in component:
            if side == "r":
                rows[idx] -= base
            else:
                cols[idx] -= base
    return tuple(rows), tuple(cols)
