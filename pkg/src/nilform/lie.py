"""Lie algebras given by structure constants over the rationals.

Brackets are stored sparsely for ordered basis pairs (i < j, 0-based);
antisymmetry is structural and [x, x] = 0 by construction.  Algebras are
treated as immutable after construction, so everything here is safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotAnIdeal, SingularTransform
from .linalg import Matrix, _rref_inplace, inverse, kernel_basis, matvec, rank
from .rational import ONE, ZERO, rat


def zero_vec(n):
    return [ZERO] * n

def basis_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


class Subspace:
    """Subspace of Q^n held as a row-reduced basis matrix.

    The rref basis is canonical, so two Subspaces are equal iff their
    matrices are equal.
    """

    __slots__ = ("ambient", "matrix", "pivots")

    def __init__(self, ambient, matrix, pivots):
        self.ambient = ambient
        self.matrix = matrix
        self.pivots = pivots

    @staticmethod
    def span(ambient, vectors):
        rows = [[rat(x) for x in v] for v in vectors]
        for v in rows:
            if len(v) != ambient:
                raise DimensionMismatch("vector length != ambient dimension")
        pivots = _rref_inplace(rows, ambient)
        return Subspace(ambient, Matrix(rows[: len(pivots)], copy=False), tuple(pivots))

    @staticmethod
    def zero(ambient):
        return Subspace.span(ambient, [])

    @staticmethod
    def full(ambient):
        return Subspace.span(ambient, Matrix.identity(ambient).rows())

    @property
    def dim(self):
        return self.matrix.nrows

    def basis_vectors(self):
        return self.matrix.rows()

    def reduce(self, v):
        """Remainder of v after elimination against the rref basis."""
        w = [rat(x) for x in v]
        for r, p in enumerate(self.pivots):
            f = w[p]
            if f:
                row = self.matrix.data[r]
                w = [x - f * y for x, y in zip(w, row)]
        return w

    def contains(self, v):
        return all(x == 0 for x in self.reduce(v))

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis_vectors())

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.ambient, self.matrix))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient})"

    def sum(self, other):
        return Subspace.span(
            self.ambient, self.basis_vectors() + other.basis_vectors()
        )


@dataclass(frozen=True)
class JacobiFailure:
    triple: tuple
    residual: list

    def __str__(self):
        i, j, k = self.triple
        return f"Jacobi fails at basis triple ({i}, {j}, {k}): residual {self.residual}"


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q with a distinguished basis."""

    __slots__ = ("dim", "labels", "brackets", "meta")

    def __init__(self, dim, brackets, labels=None, meta=None):
        self.dim = dim
        if labels is None:
            labels = tuple(f"e{i + 1}" for i in range(dim))
        if len(labels) != dim:
            raise DimensionMismatch("label count != dim")
        self.labels = tuple(labels)
        clean = {}
        for (i, j), comp in brackets.items():
            if not (0 <= i < j < dim):
                raise DimensionMismatch(f"bad bracket pair ({i}, {j})")
            comp = {k: rat(c) for k, c in comp.items() if rat(c)}
            for k in comp:
                if not 0 <= k < dim:
                    raise DimensionMismatch(f"bad bracket target {k}")
            if comp:
                clean[(i, j)] = comp
        self.brackets = clean
        self.meta = dict(meta) if meta else {}

    # -- basic bracket machinery -------------------------------------------

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse {index: coeff} dict."""
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        d = self.brackets.get((j, i))
        return {k: -c for k, c in d.items()} if d else {}

    def _bracket_sparse(self, u, v):
        out = {}
        for (i, j), comp in self.brackets.items():
            f = u[i] * v[j] - u[j] * v[i]
            if f:
                for k, c in comp.items():
                    out[k] = out.get(k, ZERO) + f * c
        return {k: c for k, c in out.items() if c}

    def bracket(self, u, v):
        """Bilinear extension [u, v] for coordinate vectors, as a dense list."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("vector length != dim")
        out = zero_vec(self.dim)
        for k, c in self._bracket_sparse(u, v).items():
            out[k] = c
        return out

    def ad(self, v):
        """Matrix of ad(v): x -> [v, x] in the given basis."""
        if len(v) != self.dim:
            raise DimensionMismatch("vector length != dim")
        cols = []
        for j in range(self.dim):
            col = zero_vec(self.dim)
            for i in range(self.dim):
                vi = v[i]
                if not vi:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    col[k] += vi * c
            cols.append(col)
        return Matrix.from_cols(cols)

    def ad_basis(self, i):
        return self.ad(basis_vec(self.dim, i))

    # -- axioms -------------------------------------------------------------

    def jacobi_check(self):
        """None when the Jacobi identity holds, else the first failure.

        Scans basis triples i < j < k in lexicographic order and reports the
        residual of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
        """
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                cij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    acc = {}
                    for a, c in cij.items():
                        for t, d in self.bracket_basis(a, k).items():
                            acc[t] = acc.get(t, ZERO) + c * d
                    for a, c in self.bracket_basis(j, k).items():
                        for t, d in self.bracket_basis(a, i).items():
                            acc[t] = acc.get(t, ZERO) + c * d
                    for a, c in self.bracket_basis(k, i).items():
                        for t, d in self.bracket_basis(a, j).items():
                            acc[t] = acc.get(t, ZERO) + c * d
                    if any(acc.values()):
                        res = zero_vec(n)
                        for t, c in acc.items():
                            res[t] = c
                        return JacobiFailure((i, j, k), res)
        return None

    def is_lie_algebra(self):
        return self.jacobi_check() is None

    # -- derived structure ---------------------------------------------------

    def derived_subalgebra(self):
        vecs = []
        for comp in self.brackets.values():
            v = zero_vec(self.dim)
            for k, c in comp.items():
                v[k] = c
            vecs.append(v)
        return Subspace.span(self.dim, vecs)

    def center(self):
        """Kernel of the stacked adjoint matrices."""
        rows = []
        for j in range(self.dim):
            cols = [self.bracket_basis(i, j) for i in range(self.dim)]
            for k in range(self.dim):
                row = [cols[i].get(k, ZERO) for i in range(self.dim)]
                if any(row):
                    rows.append(row)
        if not rows:
            return Subspace.full(self.dim)
        return Subspace.span(self.dim, kernel_basis(Matrix(rows, copy=False)))

    def _bracket_spaces(self, a: Subspace, b: Subspace):
        vecs = []
        for u in a.basis_vectors():
            for v in b.basis_vectors():
                vecs.append(self.bracket(u, v))
        return Subspace.span(self.dim, vecs)

    def lower_central_series(self):
        """[C^0 = g, C^1, ...] descending; ends with the first repeat or 0."""
        whole = Subspace.full(self.dim)
        series = [whole]
        while True:
            nxt = self._bracket_spaces(whole, series[-1])
            if nxt.dim == series[-1].dim:
                break
            series.append(nxt)
            if nxt.dim == 0:
                break
        return series

    def derived_series(self):
        series = [Subspace.full(self.dim)]
        while True:
            nxt = self._bracket_spaces(series[-1], series[-1])
            if nxt.dim == series[-1].dim:
                break
            series.append(nxt)
            if nxt.dim == 0:
                break
        return series

    def is_nilpotent(self):
        return self.lower_central_series()[-1].dim == 0

    def is_abelian(self):
        return not self.brackets

    def has_abelian_direct_factor(self):
        """True iff some central vector lies outside the derived algebra.

        Such a vector spans an abelian direct summand: any hyperplane
        containing the derived algebra and complementary to it is an ideal.
        """
        c1 = self.derived_subalgebra()
        return not c1.contains_subspace(self.center())

    # -- constructions --------------------------------------------------------

    def change_basis(self, transform):
        """Conjugate the structure constants by an invertible matrix.

        Columns of the matrix express the new basis in old coordinates.
        """
        t = transform.matrix if isinstance(transform, BasisChange) else transform
        if t.nrows != self.dim or t.ncols != self.dim:
            raise DimensionMismatch("basis change must be n x n")
        if rank(t) != self.dim:
            raise SingularTransform("basis change matrix is singular")
        tinv = inverse(t)
        cols = [t.col(j) for j in range(self.dim)]
        new = {}
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                w = self.bracket(cols[a], cols[b])
                coeffs = matvec(tinv, w)
                comp = {k: c for k, c in enumerate(coeffs) if c}
                if comp:
                    new[(a, b)] = comp
        meta = {k: v for k, v in self.meta.items() if k != "defining_basis"}
        return LieAlgebra(self.dim, new, labels=self.labels, meta=meta)

    def is_ideal(self, s: Subspace):
        return all(
            s.contains(self.bracket(basis_vec(self.dim, j), v))
            for v in s.basis_vectors()
            for j in range(self.dim)
        )

    def quotient(self, ideal: Subspace):
        """Quotient by an ideal, on the standard-vector complement basis.

        The complement takes the non-pivot coordinates of the ideal's rref
        basis in ascending order, which makes the construction deterministic.
        """
        if not self.is_ideal(ideal):
            raise NotAnIdeal("subspace is not an ideal")
        pivot_set = set(ideal.pivots)
        comp = [i for i in range(self.dim) if i not in pivot_set]
        index_of = {c: t for t, c in enumerate(comp)}
        new = {}
        for a in range(len(comp)):
            for b in range(a + 1, len(comp)):
                w = self.bracket(
                    basis_vec(self.dim, comp[a]), basis_vec(self.dim, comp[b])
                )
                w = ideal.reduce(w)
                compd = {}
                for k, c in enumerate(w):
                    if c:
                        compd[index_of[k]] = c
                if compd:
                    new[(a, b)] = compd
        labels = tuple(self.labels[c] for c in comp)
        return LieAlgebra(len(comp), new, labels=labels)

    def direct_sum(self, other):
        n1 = self.dim
        labels = list(self.labels)
        for lab in other.labels:
            while lab in labels:
                lab = lab + "'"
            labels.append(lab)
        new = {}
        for (i, j), comp in self.brackets.items():
            new[(i, j)] = dict(comp)
        for (i, j), comp in other.brackets.items():
            new[(i + n1, j + n1)] = {k + n1: c for k, c in comp.items()}
        return LieAlgebra(n1 + other.dim, new, labels=tuple(labels))

    def restrict_to_coordinates(self, indices):
        """Subalgebra on a coordinate subspace; indices must be closed."""
        indices = list(indices)
        index_of = {c: t for t, c in enumerate(indices)}
        idx_set = set(indices)
        new = {}
        for a in range(len(indices)):
            for b in range(a + 1, len(indices)):
                comp = self.bracket_basis(indices[a], indices[b])
                if not set(comp) <= idx_set:
                    raise NotAnIdeal("coordinates are not bracket-closed")
                if comp:
                    new[(a, b)] = {index_of[k]: c for k, c in comp.items()}
        labels = tuple(self.labels[c] for c in indices)
        return LieAlgebra(len(indices), new, labels=labels)

    def coordinate_subspace_is_ideal(self, indices):
        idx_set = set(indices)
        for i in idx_set:
            for j in range(self.dim):
                if not set(self.bracket_basis(i, j)) <= idx_set:
                    return False
        return True

    # -- misc -----------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.brackets == other.brackets
        )

    def __hash__(self):
        items = tuple(
            (pair, tuple(sorted(comp.items())))
            for pair, comp in sorted(self.brackets.items())
        )
        return hash((self.dim, items))

    def __repr__(self):
        name = self.meta.get("name")
        tag = f" {name}" if name else ""
        return f"LieAlgebra(dim {self.dim}{tag}, {len(self.brackets)} bracket pairs)"

    def describe(self):
        lines = []
        for (i, j), comp in sorted(self.brackets.items()):
            terms = []
            for k in sorted(comp):
                c = comp[k]
                lab = self.labels[k]
                if c == 1:
                    terms.append(lab)
                elif c == -1:
                    terms.append(f"-{lab}")
                else:
                    terms.append(f"{c}*{lab}")
            lines.append(f"[{self.labels[i]}, {self.labels[j]}] = {' + '.join(terms)}")
        return "\n".join(lines)


class BasisChange:
    """Invertible transition matrix, optionally tagged with its kind."""

    KINDS = ("I", "II", "III", "IV", "general")

    def __init__(self, matrix: Matrix, kind="general"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown basis-change kind {kind!r}")
        if matrix.nrows != matrix.ncols:
            raise DimensionMismatch("basis change must be square")
        if rank(matrix) != matrix.nrows:
            raise SingularTransform("basis change matrix is singular")
        self.matrix = matrix
        self.kind = kind

    def __repr__(self):
        return f"BasisChange(kind {self.kind}, n={self.matrix.nrows})"


def abelian(n, labels=None):
    return LieAlgebra(n, {}, labels=labels, meta={"name": f"abelian{n}"})


def heisenberg(p=1):
    """Heisenberg algebra H_{2p+1}: [x_i, y_i] = z."""
    n = 2 * p + 1
    brackets = {(2 * i, 2 * i + 1): {n - 1: ONE} for i in range(p)}
    labels = []
    for i in range(p):
        labels += [f"x{i + 1}", f"y{i + 1}"]
    labels.append("z")
    return LieAlgebra(n, brackets, labels=tuple(labels), meta={"name": f"H{n}"})
