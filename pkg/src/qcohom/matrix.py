"""Dense matrices over an exact field, and determinants of polynomial matrices."""

from fractions import Fraction
from functools import lru_cache

from .errors import NotSquare, RingMismatch


class DenseMatrix:
    """Row-major matrix over a field (Fraction or RatFunc entries)."""

    __slots__ = ("rows", "nrows", "ncols", "zero", "one")

    def __init__(self, rows, ncols=None, zero=Fraction(0), one=Fraction(1)):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.zero = zero
        self.one = one

    @classmethod
    def identity(cls, n, zero=Fraction(0), one=Fraction(1)):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n, zero, one)

    @classmethod
    def zeros(cls, r, c, zero=Fraction(0), one=Fraction(1)):
        return cls([[zero] * c for _ in range(r)], c, zero, one)

    def _like(self, rows, ncols=None):
        return DenseMatrix(rows, ncols if ncols is not None else self.ncols, self.zero, self.one)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        return DenseMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
            self.zero,
            self.one,
        )

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return self._like([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return self._like([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = [other.column(j) for j in range(other.ncols)]
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            row = []
            for col in cols:
                acc = self.zero
                for k, a in nz:
                    b = col[k]
                    if b != 0:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return self._like(out, other.ncols)

    def __pow__(self, k):
        if self.nrows != self.ncols:
            raise NotSquare("power of a non-square matrix")
        result = DenseMatrix.identity(self.nrows, self.zero, self.one)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def scale(self, s):
        return self._like([[a * s for a in r] for r in self.rows])

    def trace(self):
        if self.nrows != self.ncols:
            raise NotSquare("trace of a non-square matrix")
        acc = self.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def is_symmetric(self):
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def stack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return self._like(self.rows + other.rows)

    def rank(self):
        return matrix_rank(self)

    def rref(self):
        """Reduced row echelon form and pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            p = next((i for i in range(r, self.nrows) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = self.one / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return self._like(rows), pivots

    def nullspace(self):
        """Basis of ``{v : M v = 0}`` as a list of column vectors (lists)."""
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [self.zero] * self.ncols
            v[f] = self.one
            for i, pc in enumerate(pivots):
                v[pc] = -R.rows[i][f]
            basis.append(v)
        return basis

    def inverse(self):
        if self.nrows != self.ncols:
            raise NotSquare("inverse of a non-square matrix")
        n = self.nrows
        aug = self._like(
            [r + [self.one if i == j else self.zero for j in range(n)] for i, r in enumerate(self.rows)],
            2 * n,
        )
        R, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return self._like([r[n:] for r in R.rows], n)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"DenseMatrix([{body}])"


def matrix_rank(M: DenseMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in M.rows]
    nr, nc = M.nrows, M.ncols
    prev = M.one
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        p = next((i for i in range(rank, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        piv = rows[rank][c]
        for i in range(rank + 1, nr):
            a = rows[i][c]
            ri = rows[i]
            rp = rows[rank]
            # Bareiss step; the division by the previous pivot is exact.
            rows[i] = [(piv * ri[k] - a * rp[k]) / prev if k > c else M.zero for k in range(nc)]
        prev = piv
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# determinants of polynomial matrices


def det_poly_matrix(M):
    """Exact determinant of a square matrix of polynomials.

    Laplace expansion along the first row, memoized on the set of columns
    still available, so the cost is ``O(n * 2^n)`` polynomial products.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise NotSquare("determinant of a non-square matrix")
    if n == 0:
        raise NotSquare("empty matrix")
    ring = M[0][0].ring
    if any(e.ring != ring for row in M for e in row):
        raise RingMismatch("matrix entries live in different rings")

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return ring.one()
        acc = ring.zero()
        sign = 1
        for k, c in enumerate(cols):
            entry = M[row][c]
            if entry:
                sub = minor(row + 1, cols[:k] + cols[k + 1 :])
                term = entry * sub
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, tuple(range(n)))
