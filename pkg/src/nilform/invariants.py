"""Isomorphism invariants: characteristic sequence, fingerprints, distinction.

The characteristic sequence is the lexicographic maximum, over vectors X
outside the derived algebra, of the Jordan block profile of ad(X).  The
maximum is attained on a Zariski-open set, so it is sampled: every basis
vector outside C1, 64 random small-integer vectors, and the distinguished
first basis vector.  Each sampled profile is computed exactly; the result
is a certified lexicographic lower bound and is cross-checked against the
expected value for every catalog entry in the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import NotNilpotent, VectorInDerivedAlgebra
from .lie import LieAlgebra, Subspace, basis_vec
from .linalg import nilpotent_jordan_profile, rank
from .rational import rat

DEFAULT_SEED = 20260809
CHAR_SEQUENCE_SAMPLES = 64


class CharSequence(tuple):
    """Descending positive integers; compares lexicographically as a tuple."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("characteristic sequence entries must be positive")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError("characteristic sequence must be sorted descending")
        return super().__new__(cls, parts)

    @property
    def total(self):
        return sum(self)

    def __repr__(self):
        return "(" + ",".join(str(p) for p in self) + ")"


def p_filiform_sequence(n, p):
    """(n-p, 1, ..., 1) with p trailing ones."""
    return CharSequence((n - p,) + (1,) * p)


def char_sequence_of_vector(g: LieAlgebra, x) -> CharSequence:
    """Jordan profile of ad(x); requires x outside the derived algebra."""
    if g.derived_subalgebra().contains(x):
        raise VectorInDerivedAlgebra("characteristic vectors lie outside C1")
    return CharSequence(nilpotent_jordan_profile(g.ad(x)))


def _profile_upper_bound(n, rank1):
    """Lexicographically largest profile an operator of rank rank1 can have."""
    blocks = n - rank1
    if blocks <= 0:
        return (n + 1,)  # unreachable sentinel: treat as possibly huge
    return (n - blocks + 1,) + (1,) * (blocks - 1)


def char_sequence_with_witness(
    g: LieAlgebra, seed=DEFAULT_SEED, samples=CHAR_SEQUENCE_SAMPLES
):
    """(CharSequence, witness vector) via exact sampled maximisation."""
    n = g.dim
    if n == 0:
        return CharSequence(()), []
    c1 = g.derived_subalgebra()
    rng = random.Random(seed)
    candidates = [basis_vec(n, 0)]
    candidates += [basis_vec(n, i) for i in range(1, n)]
    for _ in range(samples):
        candidates.append([rat(rng.randint(-3, 3)) for _ in range(n)])

    best = None
    witness = None
    for x in candidates:
        if all(v == 0 for v in x) or c1.contains(x):
            continue
        ad = g.ad(x)
        if best is not None and _profile_upper_bound(n, rank(ad)) <= best:
            continue
        profile = nilpotent_jordan_profile(ad)
        if best is None or profile > best:
            best = profile
            witness = x
    if best is None:
        raise VectorInDerivedAlgebra("no vector outside C1 was sampled")
    return CharSequence(best), witness


def char_sequence(g: LieAlgebra, seed=DEFAULT_SEED, samples=CHAR_SEQUENCE_SAMPLES):
    return char_sequence_with_witness(g, seed=seed, samples=samples)[0]


def nilindex(g: LieAlgebra) -> int:
    """Length of the lower central series until it reaches zero."""
    series = g.lower_central_series()
    if series[-1].dim != 0:
        raise NotNilpotent("algebra is not nilpotent")
    return len(series) - 1


def is_p_filiform(g: LieAlgebra, p: int, seed=DEFAULT_SEED) -> bool:
    return char_sequence(g, seed=seed) == p_filiform_sequence(g.dim, p)


@dataclass(frozen=True)
class Fingerprint:
    """Invariant tuple mirroring the structural table columns.

    The weight signature is basis-dependent (it reads off diagonal
    derivations in the presented basis), so it is carried alongside but
    excluded from equality; pairwise_distinguish only consults it for
    algebras still in their defining catalog basis.
    """

    dim: int
    dim_derived: int
    derived_abelian: bool
    dim_center: int
    char_seq: CharSequence
    lcs_dims: tuple
    ds_dims: tuple
    dim_der: int
    quotient_by_center: tuple
    weights: object = field(default=None, compare=False)

    def key(self):
        return (
            self.dim,
            self.dim_derived,
            self.derived_abelian,
            self.dim_center,
            tuple(self.char_seq),
            self.lcs_dims,
            self.ds_dims,
            self.dim_der,
            self.quotient_by_center,
        )

    def to_dict(self):
        return {
            "dim": self.dim,
            "dim_derived": self.dim_derived,
            "derived_abelian": self.derived_abelian,
            "dim_center": self.dim_center,
            "char_seq": list(self.char_seq),
            "lcs_dims": list(self.lcs_dims),
            "ds_dims": list(self.ds_dims),
            "dim_der": self.dim_der,
            "quotient_by_center": list(self.quotient_by_center),
            "weights": str(self.weights) if self.weights is not None else None,
        }


def _is_abelian_subspace(g: LieAlgebra, s: Subspace) -> bool:
    vecs = s.basis_vectors()
    return all(
        all(x == 0 for x in g.bracket(u, v))
        for t, u in enumerate(vecs)
        for v in vecs[t + 1 :]
    )


def fingerprint(g: LieAlgebra, seed=DEFAULT_SEED) -> Fingerprint:
    from .derivations import derivation_space, diagonal_derivations

    c1 = g.derived_subalgebra()
    z = g.center()
    lcs = tuple(s.dim for s in g.lower_central_series())
    ds = tuple(s.dim for s in g.derived_series())
    seq = char_sequence(g, seed=seed)
    q = g.quotient(z)
    qseq = char_sequence(q, seed=seed) if q.dim else CharSequence(())
    quotient_fp = (
        q.dim,
        q.derived_subalgebra().dim,
        q.center().dim,
        tuple(qseq),
    )
    weights = (
        diagonal_derivations(g) if g.meta.get("defining_basis") else None
    )
    return Fingerprint(
        dim=g.dim,
        dim_derived=c1.dim,
        derived_abelian=_is_abelian_subspace(g, c1),
        dim_center=z.dim,
        char_seq=seq,
        lcs_dims=lcs,
        ds_dims=ds,
        dim_der=derivation_space(g).dim,
        quotient_by_center=quotient_fp,
        weights=weights,
    )


@dataclass
class DistinguishResult:
    classes: list          # list of lists of input indices
    unresolved_pairs: list # index pairs left in a shared class
    fingerprints: list
    refined_by_weights: list  # class keys that needed the weight signature

    def class_of(self, idx):
        for c in self.classes:
            if idx in c:
                return c
        raise KeyError(idx)


def pairwise_distinguish(entries, seed=DEFAULT_SEED) -> DistinguishResult:
    """Partition algebras into fingerprint classes.

    Same-class pairs are reported as unresolved, never merged silently.
    The weight-signature refinement applies only to classes whose members
    all sit in a defining catalog basis: the signature is read off in the
    presented basis, so for arbitrary presentations it is only a torus
    lower bound and cannot certify non-isomorphism.
    """
    algebras = [e.algebra if hasattr(e, "algebra") else e for e in entries]
    fps = [fingerprint(g, seed=seed) for g in algebras]
    groups = {}
    for idx, fp in enumerate(fps):
        groups.setdefault(fp.key(), []).append(idx)

    classes = []
    refined = []
    for key, members in sorted(groups.items(), key=lambda kv: kv[1][0]):
        if len(members) > 1 and all(fps[i].weights is not None for i in members):
            sub = {}
            for i in members:
                sub.setdefault(fps[i].weights.canonical_key(), []).append(i)
            if len(sub) > 1:
                refined.append(members)
            classes.extend(sorted(sub.values()))
        else:
            classes.append(members)

    unresolved = []
    for cls in classes:
        for a in range(len(cls)):
            for b in range(a + 1, len(cls)):
                unresolved.append((cls[a], cls[b]))
    return DistinguishResult(
        classes=sorted(classes),
        unresolved_pairs=sorted(unresolved),
        fingerprints=fps,
        refined_by_weights=refined,
    )


def scan_coordinate_ideals(g: LieAlgebra, k: int, required_seq, seed=DEFAULT_SEED):
    """Coordinate-aligned ideals span{X1..X6, chosen Y's} of dimension k.

    Enumerates Y subsets, keeps bracket-closed ideal candidates whose
    subalgebra has the requested characteristic sequence, and returns
    (indices, fingerprint) pairs.
    """
    from itertools import combinations

    required = CharSequence(required_seq)
    n = g.dim
    found = []
    if k < 6 or k > n:
        return found
    y_indices = range(6, n)
    for extra in combinations(y_indices, k - 6):
        idx = tuple(range(6)) + extra
        if not g.coordinate_subspace_is_ideal(idx):
            continue
        sub = g.restrict_to_coordinates(idx)
        if char_sequence(sub, seed=seed) == required:
            found.append((idx, fingerprint(sub, seed=seed)))
    return found
