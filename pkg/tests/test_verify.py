from nilform import catalog, tables, verify
from nilform.lie import abelian
from nilform.rational import rat


def test_corollary_sums_suite():
    report = verify.corollary_sums_suite(pairs=((65, 83), (81, 81)))
    assert report.ok
    assert all("nilindex=5" in item.computed for item in report.items)


def test_check_algebra_file_nilpotent_report():
    report = verify.check_algebra_file(abelian(3))
    assert report.ok
    ids = [item.id for item in report.items]
    assert ids == ["jacobi", "char_sequence", "nonsplit"]


def test_weight_row_match_direct_known_row():
    g = catalog.build(58, 5)
    ok, degenerate, detail = verify.weight_row_match(g, tables.TABLE8[58])
    assert ok and not degenerate, detail
    # the partner row does not fit
    ok2, _, _ = verify.weight_row_match(g, tables.TABLE8[75])
    assert not ok2


def test_structural_suite_reconstruction_notes():
    report = verify.tables_structural_suite(6, [3], alphas=(rat(1),))
    noted = {i.id.split(",")[0] for i in report.items if "repaired" in i.note}
    assert noted == {"g7^81", "g7^82"}


def test_charnilp_suite_informational_dimension():
    report = verify.charnilp_suite([10], alphas=(rat(1),))
    assert report.ok                      # no printed expectation at n=10
    assert "informational" in report.items[0].expected
