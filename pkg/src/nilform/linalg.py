"""Dense exact linear algebra over the rationals.

Row reduction uses deterministic pivoting (first nonzero column, smallest
row index) so results are byte-reproducible.  The characteristic polynomial
is computed with the Berkowitz scheme, which is division-free.  Matrices
are small and dense here (catalog dimensions stay around 20), so there is
no sparse machinery.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NotNilpotent, SingularTransform
from .rational import ONE, ZERO, rat


class Matrix:
    """Immutable-by-convention dense rational matrix."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data, copy=True):
        data = [[rat(x) for x in row] for row in data] if copy else data
        self.data = data
        self.nrows = len(data)
        self.ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != self.ncols:
                raise DimensionMismatch("ragged rows")

    @staticmethod
    def zeros(nrows, ncols):
        return Matrix([[ZERO] * ncols for _ in range(nrows)], copy=False)

    @staticmethod
    def identity(n):
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = ONE
        return Matrix(rows, copy=False)

    @staticmethod
    def from_rows(rows):
        return Matrix([list(r) for r in rows])

    @staticmethod
    def from_cols(cols):
        return Matrix([[col[i] for col in cols] for i in range(len(cols[0]))])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [row[j] for row in self.data]

    def rows(self):
        return [list(r) for r in self.data]

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def transpose(self):
        return Matrix(
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            copy=False,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            copy=False,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            copy=False,
        )

    def scale(self, c):
        c = rat(c)
        return Matrix([[c * x for x in row] for row in self.data], copy=False)

    def __neg__(self):
        return self.scale(-1)

    def _check_same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return matmul(self, other)
        return self.scale(other)

    def trace(self):
        if not self.is_square:
            raise DimensionMismatch("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.nrows)), ZERO)

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise DimensionMismatch("matmul shape mismatch")
    bt = b.transpose().data
    out = [
        [
            sum((x * y for x, y in zip(arow, bcol) if x and y), ZERO)
            for bcol in bt
        ]
        for arow in a.data
    ]
    return Matrix(out, copy=False)


def matvec(a: Matrix, v):
    if a.ncols != len(v):
        raise DimensionMismatch("matvec shape mismatch")
    return [
        sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a.data
    ]


def mat_pow(a: Matrix, k: int) -> Matrix:
    if not a.is_square:
        raise DimensionMismatch("power of non-square matrix")
    out = Matrix.identity(a.nrows)
    for _ in range(k):
        out = matmul(out, a)
    return out


def _rref_inplace(rows, ncols):
    """Reduce a list of row-lists to reduced row echelon form.

    Pivot choice scans columns left to right and takes the smallest row
    index with a nonzero entry.  Returns the pivot column list.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            inv = ONE / piv
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(a: Matrix):
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns).
    """
    rows = [list(r) for r in a.data]
    pivots = _rref_inplace(rows, a.ncols)
    return Matrix(rows, copy=False), len(pivots), tuple(pivots)


def rank(a: Matrix) -> int:
    rows = [list(r) for r in a.data]
    return len(_rref_inplace(rows, a.ncols))


def kernel_basis(a: Matrix):
    """Basis of the right nullspace, one vector per free column of rref(A).

    Each returned vector has a 1 in its free coordinate, so the basis is
    canonical given the deterministic pivoting.
    """
    rows = [list(r) for r in a.data]
    pivots = _rref_inplace(rows, a.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * a.ncols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        basis.append(v)
    return basis


def solve(a: Matrix, b):
    """Solve A x = b; returns None when inconsistent.

    For underdetermined systems the free coordinates are set to zero.
    """
    if a.nrows != len(b):
        raise DimensionMismatch("rhs length mismatch")
    rows = [list(r) + [rat(x)] for r, x in zip(a.data, b)]
    pivots = _rref_inplace(rows, a.ncols + 1)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [ZERO] * a.ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][a.ncols]
    return x


def inverse(a: Matrix) -> Matrix:
    if not a.is_square:
        raise DimensionMismatch("inverse of non-square matrix")
    n = a.nrows
    rows = [list(r) + [ZERO] * n for r in a.data]
    for i in range(n):
        rows[i][n + i] = ONE
    pivots = _rref_inplace(rows, 2 * n)
    if len([p for p in pivots if p < n]) != n:
        raise SingularTransform("matrix is singular")
    return Matrix([row[n:] for row in rows], copy=False)


def char_poly(a: Matrix):
    """Monic characteristic polynomial of det(lambda*I - A).

    Returns coefficients from the leading power down, e.g. the 2x2
    identity gives [1, -2, 1] for lambda^2 - 2*lambda + 1.  Uses the
    Berkowitz recurrence (division-free, exact).
    """
    if not a.is_square:
        raise DimensionMismatch("char_poly of non-square matrix")
    n = a.nrows
    if n == 0:
        return [ONE]
    m = a.data
    poly = [ONE, -m[0][0]]
    for k in range(1, n):
        # Leading (k+1)x(k+1) block split as [[B, C], [R, a]].
        akk = m[k][k]
        row_r = m[k][:k]
        col_c = [m[i][k] for i in range(k)]
        toep = [ONE, -akk]
        v = col_c
        for _ in range(k):
            toep.append(-sum((x * y for x, y in zip(row_r, v) if x and y), ZERO))
            v = [
                sum((m[i][j] * v[j] for j in range(k) if m[i][j] and v[j]), ZERO)
                for i in range(k)
            ]
        new = []
        for j in range(k + 2):
            acc = ZERO
            lo = max(0, j - (len(toep) - 1))
            for t in range(lo, min(j, k) + 1):
                pt = poly[t]
                ct = toep[j - t]
                if pt and ct:
                    acc += ct * pt
            new.append(acc)
        poly = new
    return poly


def poly_eval_matrix(coeffs, a: Matrix) -> Matrix:
    """Evaluate a polynomial (leading coefficient first) at a square matrix."""
    ident = Matrix.identity(a.nrows)
    out = Matrix.zeros(a.nrows, a.ncols)
    for c in coeffs:
        out = matmul(out, a) + ident.scale(c)
    return out


def rank_sequence(a: Matrix, kmax=None):
    """Ranks of successive powers [rank(A^0), rank(A^1), ...].

    Stops once the rank reaches zero or stabilizes, or after kmax powers.
    """
    if not a.is_square:
        raise DimensionMismatch("rank_sequence of non-square matrix")
    n = a.nrows
    if kmax is None:
        kmax = n
    seq = [n]
    p = a
    for _ in range(kmax):
        r = rank(p)
        seq.append(r)
        if r == 0 or r == seq[-2]:
            break
        p = matmul(p, a)
    return seq


def nilpotent_jordan_profile(a: Matrix):
    """Jordan block sizes of a nilpotent matrix, sorted descending.

    Derived from the rank sequence r_k = rank(A^k): the number of blocks
    of size >= k equals r_{k-1} - r_k.  Raises NotNilpotent when some
    power fails to vanish.
    """
    n = a.nrows
    seq = rank_sequence(a)
    if seq[-1] != 0:
        if n == 0:
            return ()
        raise NotNilpotent(f"rank(A^{len(seq) - 1}) = {seq[-1]} > 0")
    diffs = [seq[k - 1] - seq[k] for k in range(1, len(seq))]
    profile = []
    for size in range(len(diffs), 0, -1):
        count = diffs[size - 1] - (diffs[size] if size < len(diffs) else 0)
        profile.extend([size] * count)
    profile.sort(reverse=True)
    assert sum(profile) == n
    return tuple(profile)


def sparse_kernel(rows, ncols):
    """Kernel basis for a system given as sparse rows ({col: coeff} dicts).

    Deterministic: input rows are folded in order and each row pivots on its
    smallest remaining column.  Returns (pivot_cols, kernel_vectors) with one
    dense kernel vector per free column, ascending.
    """
    pivots = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                f = row[c]
                if f != 1:
                    inv = ONE / f
                    row = {cc: vv * inv for cc, vv in row.items()}
                pivots[c] = row
                break
            f = row.pop(c)
            for cc, vv in prow.items():
                if cc == c:
                    continue
                nv = row.get(cc, ZERO) - f * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
    # Back-substitute so pivot rows are reduced against later pivots.
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for cc in [k for k in row if k != c and k in pivots]:
            f = row.pop(cc)
            for c2, v2 in pivots[cc].items():
                if c2 == cc:
                    continue
                nv = row.get(c2, ZERO) - f * v2
                if nv:
                    row[c2] = nv
                else:
                    row.pop(c2, None)
    pivot_cols = sorted(pivots)
    pivot_set = set(pivot_cols)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for p in pivot_cols:
            coeff = pivots[p].get(free)
            if coeff:
                v[p] = -coeff
        kernel.append(v)
    return pivot_cols, kernel


def conjugate_partition(parts):
    """Conjugate of an integer partition given as a descending list."""
    if not parts:
        return ()
    out = []
    for k in range(1, parts[0] + 1):
        out.append(sum(1 for p in parts if p >= k))
    return tuple(out)
