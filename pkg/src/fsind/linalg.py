"""Dense exact linear algebra over the scalar fields.

Matrices are immutable by convention (nothing mutates rows after
construction). Elimination is Gauss-Jordan with explicit zero tests, which
keeps the inner loops cheap on the very sparse constraint matrices this
package produces; determinants use fraction-free Bareiss elimination so
rational-function entries do not balloon mid-computation.

Kernel bases are canonical: the rows of the unique reduced row echelon
basis of the null space, ordered by leading index. Repeated runs therefore
produce identical matrices, which the CLI's byte-stable reports rely on.
"""

from __future__ import annotations

from .scalars import FieldTag


class DimensionMismatch(Exception):
    pass


class NotInSpan(Exception):
    pass


class SingularMatrix(Exception):
    pass


class Matrix:
    __slots__ = ("tag", "nrows", "ncols", "rows")

    def __init__(self, tag: FieldTag, rows):
        rows = [list(r) for r in rows]
        self.tag = tag
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != self.ncols:
                raise DimensionMismatch("ragged rows")
        self.rows = rows

    @staticmethod
    def zeros(tag, nrows, ncols):
        z = tag.zero()
        return Matrix(tag, [[z] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(tag, n):
        z, o = tag.zero(), tag.one()
        return Matrix(tag, [[o if i == j else z for j in range(n)]
                            for i in range(n)])

    @staticmethod
    def from_vec(tag, nrows, ncols, vec):
        """Inverse of .vec(): reshape a row-major flat vector."""
        if len(vec) != nrows * ncols:
            raise DimensionMismatch("vector length %d != %d*%d"
                                    % (len(vec), nrows, ncols))
        return Matrix(tag, [vec[i * ncols:(i + 1) * ncols]
                            for i in range(nrows)])

    def vec(self):
        """Row-major flattening, entry (r, c) at index r*ncols + c."""
        return tuple(x for row in self.rows for x in row)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and all(a == b for ra, rb in zip(self.rows, other.rows)
                        for a, b in zip(ra, rb)))

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.vec()))

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("shape %s vs %s" % (self.shape, other.shape))
        return Matrix(self.tag, [[a + b for a, b in zip(ra, rb)]
                                 for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("shape %s vs %s" % (self.shape, other.shape))
        return Matrix(self.tag, [[a - b for a, b in zip(ra, rb)]
                                 for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.tag, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch("cannot multiply %s by %s"
                                    % (self.shape, other.shape))
        z = self.tag.zero()
        out = [[z] * other.ncols for _ in range(self.nrows)]
        brows = other.rows
        for i, arow in enumerate(self.rows):
            orow = out[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = brows[k]
                for j, b in enumerate(brow):
                    if b:
                        orow[j] = orow[j] + a * b
        return Matrix(self.tag, out)

    def scale(self, s):
        return Matrix(self.tag, [[s * a for a in r] for r in self.rows])

    def transpose(self):
        return Matrix(self.tag, [list(col) for col in zip(*self.rows)]
                      if self.rows else [])

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length %d != %d"
                                    % (len(vec), self.ncols))
        z = self.tag.zero()
        out = []
        for row in self.rows:
            acc = z
            for a, v in zip(row, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of a non-square matrix")
        acc = self.tag.zero()
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self):
        return all(not a for row in self.rows for a in row)

    def __repr__(self):
        return "Matrix(%s, %r)" % (self.tag, self.rows)


def _rref_in_place(rows, ncols):
    """Reduce rows to RREF; returns the list of pivot column indices."""
    pivots = []
    prow = 0
    for col in range(ncols):
        pivot = None
        for r in range(prow, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[prow], rows[pivot] = rows[pivot], rows[prow]
        lead = rows[prow][col]
        if lead != 1:
            inv = 1 / lead
            rows[prow] = [inv * a for a in rows[prow]]
        prow_vals = rows[prow]
        for r in range(len(rows)):
            if r == prow:
                continue
            f = rows[r][col]
            if not f:
                continue
            rows[r] = [a - f * b for a, b in zip(rows[r], prow_vals)]
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break
    return pivots


def rref(m: Matrix):
    rows = [list(r) for r in m.rows]
    pivots = _rref_in_place(rows, m.ncols)
    return Matrix(m.tag, rows), pivots


def rank(m: Matrix):
    rows = [list(r) for r in m.rows]
    return len(_rref_in_place(rows, m.ncols))


def kernel_basis(m: Matrix):
    """Canonical basis of {x : m x = 0} as a list of tuples."""
    rows = [list(r) for r in m.rows]
    pivots = _rref_in_place(rows, m.ncols)
    pivot_set = set(pivots)
    z, o = m.tag.zero(), m.tag.one()
    vectors = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [z] * m.ncols
        v[free] = o
        for prow, pcol in enumerate(pivots):
            coeff = rows[prow][free]
            if coeff:
                v[pcol] = -coeff
        vectors.append(v)
    if not vectors:
        return []
    pv = _rref_in_place(vectors, m.ncols)
    return [tuple(v) for v in vectors[:len(pv)]]


def span_canonical(tag, vectors):
    """Unique RREF basis of the span of the given vectors."""
    if not vectors:
        return []
    rows = [list(v) for v in vectors]
    pv = _rref_in_place(rows, len(rows[0]))
    return [tuple(v) for v in rows[:len(pv)]]


def kernel_intersection(tag, constraints, ncols):
    """Canonical basis of the joint kernel of a sequence of matrices.

    Constraints are consumed lazily and each one is restricted to the
    solution span found so far, so the eliminations stay small once the
    first few constraints have cut the space down.
    """
    basis = None  # list of tuples spanning the current solution space
    for c in constraints:
        if c.ncols != ncols:
            raise DimensionMismatch("constraint has %d columns, expected %d"
                                    % (c.ncols, ncols))
        if basis is None:
            basis = kernel_basis(c)
        else:
            span = Matrix(tag, basis).transpose()  # ncols x m
            coeffs = kernel_basis(c * span)
            basis = [span.apply(k) for k in coeffs]
        if not basis:
            return []
    if basis is None:
        return [tuple(Matrix.identity(tag, ncols).rows[i])
                for i in range(ncols)]
    return span_canonical(tag, basis)


def det(m: Matrix):
    """Determinant by fraction-free Bareiss elimination with row swaps."""
    if m.nrows != m.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.tag.one()
    rows = [list(r) for r in m.rows]
    sign = 1
    prev = m.tag.one()
    for k in range(n - 1):
        if not rows[k][k]:
            for r in range(k + 1, n):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return m.tag.zero()
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (pivot * rows[i][j] - rows[i][k] * rows[k][j]) / prev
            rows[i][k] = m.tag.zero()
        prev = pivot
    d = rows[n - 1][n - 1]
    return -d if sign < 0 else d


def inverse(m: Matrix):
    if m.nrows != m.ncols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.nrows
    ident = Matrix.identity(m.tag, n)
    rows = [list(r) + list(ir) for r, ir in zip(m.rows, ident.rows)]
    pivots = _rref_in_place(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return Matrix(m.tag, [r[n:] for r in rows])


def solve_in_span(tag, vectors, target):
    """Coefficients expressing target in the given (independent) vectors.

    Raises NotInSpan when the system is inconsistent. With an independent
    spanning set the answer is unique.
    """
    if not vectors:
        if any(target):
            raise NotInSpan("target is nonzero but the span is trivial")
        return ()
    ncols = len(vectors) + 1
    rows = [list(col) + [t] for col, t in zip(zip(*vectors), target)]
    pivots = _rref_in_place(rows, ncols)
    if (ncols - 1) in pivots:
        raise NotInSpan("target lies outside the span")
    z = tag.zero()
    coeffs = [z] * len(vectors)
    for prow, pcol in enumerate(pivots):
        coeffs[pcol] = rows[prow][-1]
    return tuple(coeffs)
