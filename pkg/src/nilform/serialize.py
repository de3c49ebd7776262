"""Algebra file format: JSON with 1-based indices and rationals as strings.

Round-trips are bit exact because rationals serialize in canonical lowest
terms and bracket pairs are emitted in sorted order.
"""

from __future__ import annotations

import json

from .errors import DimensionMismatch
from .lie import LieAlgebra
from .rational import parse_rat, rat_str


def algebra_to_dict(g: LieAlgebra) -> dict:
    items = []
    for (i, j) in sorted(g.brackets):
        comp = g.brackets[(i, j)]
        coeffs = {str(k + 1): rat_str(c) for k, c in sorted(comp.items())}
        items.append({"i": i + 1, "j": j + 1, "coeffs": coeffs})
    return {"dim": g.dim, "labels": list(g.labels), "brackets": items}


def algebra_from_dict(d: dict) -> LieAlgebra:
    dim = int(d["dim"])
    labels = d.get("labels")
    brackets = {}
    for item in d.get("brackets", []):
        i, j = int(item["i"]) - 1, int(item["j"]) - 1
        if not 0 <= i < j < dim:
            raise DimensionMismatch(f"bad bracket pair ({i + 1}, {j + 1})")
        comp = {int(k) - 1: parse_rat(v) for k, v in item["coeffs"].items()}
        brackets[(i, j)] = comp
    return LieAlgebra(dim, brackets, labels=tuple(labels) if labels else None)


def dumps(g: LieAlgebra) -> str:
    return json.dumps(algebra_to_dict(g), indent=1, sort_keys=False)


def loads(text: str) -> LieAlgebra:
    return algebra_from_dict(json.loads(text))


def save(g: LieAlgebra, path):
    with open(path, "w") as fh:
        fh.write(dumps(g))
        fh.write("\n")


def load(path) -> LieAlgebra:
    with open(path) as fh:
        return loads(fh.read())
