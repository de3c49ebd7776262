import pytest

from nilform import catalog, tables
from nilform.errors import InvalidDimension, MissingParameter
from nilform.invariants import char_sequence, fingerprint, p_filiform_sequence
from nilform.rational import rat


def test_family_count():
    assert len(catalog.FAMILIES) == 103
    assert sum(1 for f in catalog.FAMILIES.values() if f.parity == "even") == 53


def test_m_minimum_enforced():
    with pytest.raises(InvalidDimension):
        catalog.build(1, 3)
    with pytest.raises(InvalidDimension):
        catalog.build(4, 4)


def test_alpha_handling():
    with pytest.raises(MissingParameter):
        catalog.build(7, 4)
    with pytest.raises(MissingParameter):
        catalog.build(7, 4, 0)
    with pytest.raises(MissingParameter):
        catalog.build(1, 4, 2)
    g = catalog.build(66, 3, 2)
    assert g.bracket_basis(3, 1) == {5: rat(2)}    # [X4,X2] = 2 X6


def test_build_examples():
    g = catalog.build(1, 5)
    assert g.bracket_basis(8, 9) == {5: rat(1)}    # [Y3,Y4] = X6
    assert g.dim == 10


def test_enumerate_counts():
    assert catalog.enumerate_instances(6) == []
    n7 = catalog.enumerate_instances(7)
    assert len({inst.family for inst in n7}) == 27
    assert len(n7) == 27 - 1 + len(catalog.DEFAULT_ALPHAS)
    n12 = catalog.enumerate_instances(12)
    assert len({inst.family for inst in n12}) == 53
    assert len(n12) == 53 - 1 + len(catalog.DEFAULT_ALPHAS)


def test_enumerate_deterministic_order():
    a = [inst.id for inst in catalog.enumerate_instances(9)]
    b = [inst.id for inst in catalog.enumerate_instances(9)]
    assert a == b
    keys = [(inst.n, inst.family) for inst in catalog.enumerate_instances(9)]
    assert keys == sorted(keys)


def test_errata():
    assert catalog.errata(1) == []
    assert any("68" in note for note in catalog.errata(69))
    assert any("reconstructed" in note for note in catalog.errata(61))
    assert any("repaired" in note for note in catalog.errata(81))
    with pytest.raises(InvalidDimension):
        catalog.errata(104)


def test_structural_columns_all_families():
    # dim Z and dim C1 against every printed row, at the family minimum
    for i, fam in sorted(catalog.FAMILIES.items()):
        g = catalog.build(i, fam.m_min, 2 if fam.needs_alpha else None)
        if i in tables.DIM_CENTER:      # families 5 and 54 have no printed row
            assert g.center().dim == tables.DIM_CENTER[i], f"family {i}"
        assert g.derived_subalgebra().dim == tables.DIM_DERIVED[i], f"family {i}"
        assert g.derived_subalgebra().contains_subspace(g.center()), f"family {i}"


def test_filiform_at_minimum_except_documented():
    # families 4 and 55 have a Heisenberg pair already at their minimal m
    deviant = {4, 55}
    for i, fam in sorted(catalog.FAMILIES.items()):
        g = catalog.build(i, fam.m_min, 2 if fam.needs_alpha else None)
        seq = char_sequence(g)
        expected = p_filiform_sequence(g.dim, g.dim - 5)
        if i in deviant:
            assert tuple(seq) == (5, 2) + (1,) * (g.dim - 7), f"family {i}"
        else:
            assert seq == expected, f"family {i}: {seq}"


def test_alpha_sign_fingerprints_agree():
    fa = fingerprint(catalog.build(7, 4, 2))
    fb = fingerprint(catalog.build(7, 4, -2))
    assert fa.key() == fb.key()
    fa = fingerprint(catalog.build(66, 3, rat(1, 2)))
    fb = fingerprint(catalog.build(66, 3, rat(-1, 2)))
    assert fa.key() == fb.key()


def test_printed_presentations_are_lie_algebras():
    for g in (
        catalog.derivation_presentation_g8_6(),
        catalog.derivation_presentation_g7_81(),
    ):
        assert g.jacobi_check() is None


def test_chain_with_abelian():
    g = catalog.chain_with_abelian(4, 5)
    assert tuple(char_sequence(g)) == (3, 1, 1)
    g = catalog.chain_with_abelian(5, 6)
    assert tuple(char_sequence(g)) == (4, 1, 1)
