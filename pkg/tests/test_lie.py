import random

import pytest

from nilform import catalog
from nilform.errors import NotAnIdeal, SingularTransform
from nilform.invariants import char_sequence
from nilform.lie import BasisChange, LieAlgebra, Subspace, abelian, basis_vec, heisenberg
from nilform.linalg import Matrix, rank
from nilform.rational import rat


def mu10_1():
    return catalog.build(1, 5)


def test_bracket_alternating():
    g = mu10_1()
    rng = random.Random(1)
    for _ in range(10):
        v = [rat(rng.randint(-3, 3)) for _ in range(g.dim)]
        assert all(x == 0 for x in g.bracket(v, v))


def test_bracket_catalog_values():
    g = mu10_1()
    x1, x2 = basis_vec(10, 0), basis_vec(10, 1)
    assert g.bracket(x1, x2) == basis_vec(10, 2)            # [X1,X2] = X3
    x3, x4 = basis_vec(10, 2), basis_vec(10, 3)
    assert g.bracket(x3, x4) == basis_vec(10, 6)            # [X3,X4] = Y1


def test_bracket_bilinear():
    g = mu10_1()
    rng = random.Random(2)
    for _ in range(10):
        u, v, w = (
            [rat(rng.randint(-2, 2)) for _ in range(10)] for _ in range(3)
        )
        lhs = g.bracket([x + y for x, y in zip(u, v)], w)
        rhs = [x + y for x, y in zip(g.bracket(u, w), g.bracket(v, w))]
        assert lhs == rhs


def test_jacobi_abelian_and_catalog():
    assert abelian(5).jacobi_check() is None
    for inst in catalog.enumerate_instances(10, alphas=(rat(2),)):
        assert inst.algebra.jacobi_check() is None


def test_jacobi_failure_reported():
    g = mu10_1()
    brackets = {k: dict(v) for k, v in g.brackets.items()}
    brackets[(2, 3)] = {6: rat(2)}  # perturb [X3,X4]
    bad = LieAlgebra(10, brackets, labels=g.labels)
    failure = bad.jacobi_check()
    assert failure is not None
    assert 2 in failure.triple or 3 in failure.triple


def test_change_basis_identity():
    g = mu10_1()
    assert g.change_basis(Matrix.identity(10)) == g


def test_change_basis_roundtrip_and_jacobi():
    rng = random.Random(3)
    g = catalog.build(65, 3)
    n = g.dim
    trials = 0
    while trials < 100:
        t = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if rank(t) < n:
            continue
        trials += 1
        h = g.change_basis(t)
        assert h.jacobi_check() is None
        from nilform.linalg import inverse

        assert h.change_basis(inverse(t)) == g


def test_change_basis_singular():
    g = mu10_1()
    with pytest.raises(SingularTransform):
        g.change_basis(Matrix.zeros(10, 10))


def test_derived_and_center_abelian():
    g = abelian(4)
    assert g.derived_subalgebra().dim == 0
    assert g.center().dim == 4


def test_derived_and_center_catalog():
    g = mu10_1()
    assert g.center().dim == 2          # structural table row for family 1
    assert g.derived_subalgebra().dim == 6


def test_series_reach_zero():
    g = mu10_1()
    lcs = g.lower_central_series()
    assert lcs[-1].dim == 0
    dims = [s.dim for s in lcs]
    assert dims == sorted(dims, reverse=True)
    ds = g.derived_series()
    assert ds[-1].dim == 0


def test_quotient_by_center_mu10_1():
    g = mu10_1()
    q = g.quotient(g.center())
    assert q.dim == 8
    assert q.jacobi_check() is None
    assert tuple(char_sequence(q)) == (4, 1, 1, 1, 1)


def test_quotient_by_center_mu9_55():
    # directly computed: the 7-dimensional quotient is 3-filiform
    g = catalog.build(55, 4)
    z = g.center()
    assert z.dim == 2
    q = g.quotient(z)
    assert q.dim == 7
    assert tuple(char_sequence(q)) == (4, 1, 1, 1)


def test_quotient_full_and_not_ideal():
    g = mu10_1()
    assert g.quotient(Subspace.full(10)).dim == 0
    line = Subspace.span(10, [basis_vec(10, 0)])  # X1 does not span an ideal
    with pytest.raises(NotAnIdeal):
        g.quotient(line)


def test_direct_sum_basic():
    g = mu10_1()
    s = g.direct_sum(abelian(0))
    assert s == g
    a = abelian(1).direct_sum(abelian(1))
    assert a.is_abelian() and a.dim == 2


def test_direct_sum_catalog():
    g65 = catalog.build(65, 3)
    s = g65.direct_sum(g65)
    assert s.dim == 14
    assert s.jacobi_check() is None
    assert len(s.lower_central_series()) - 1 == 5      # nilindex 5
    assert s.center().dim == 2 * g65.center().dim
    assert (
        s.derived_subalgebra().dim == 2 * g65.derived_subalgebra().dim
    )


def test_abelian_direct_factor():
    assert abelian(1).has_abelian_direct_factor()
    g = mu10_1()
    assert not g.has_abelian_direct_factor()
    assert g.direct_sum(abelian(1)).has_abelian_direct_factor()


def test_heisenberg():
    h = heisenberg(1)
    assert h.jacobi_check() is None
    assert tuple(char_sequence(h)) == (2, 1)


def test_basis_change_kind_validation():
    with pytest.raises(SingularTransform):
        BasisChange(Matrix.zeros(3, 3))
    with pytest.raises(ValueError):
        BasisChange(Matrix.identity(3), kind="V")
