import json

from nilform import catalog, serialize
from nilform.rational import rat


def test_roundtrip_bit_exact():
    for inst in catalog.enumerate_instances(9):
        text = serialize.dumps(inst.algebra)
        back = serialize.loads(text)
        assert back == inst.algebra
        assert serialize.dumps(back) == text


def test_format_shape():
    g = catalog.build(66, 3, rat(1, 2))
    d = serialize.algebra_to_dict(g)
    assert d["dim"] == 7
    assert d["labels"][0] == "X1"
    first = d["brackets"][0]
    assert first["i"] == 1 and first["j"] == 2            # 1-based, i < j
    coeffs = {item["i"]: item for item in d["brackets"]}
    entry = next(
        item for item in d["brackets"] if (item["i"], item["j"]) == (2, 4)
    )
    assert entry["coeffs"] == {"6": "-1/2"}               # [X2,X4] = -(1/2) X6


def test_file_roundtrip(tmp_path):
    g = catalog.build(7, 4, 2)
    path = tmp_path / "mu.json"
    serialize.save(g, path)
    assert serialize.load(path) == g
    raw = json.loads(path.read_text())
    assert raw["dim"] == 8
