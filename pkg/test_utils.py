import json
from fractions import Fraction

import pytest

from errors import DomainError, StructuralError
from result import render, write_reports
from experiments import exact_report
from ring_core import PolySpec, RingDescriptor
from utils import load_json, parse_matrix, parse_polys, parse_ring, parse_targets, save_json, to_json

Z8 = RingDescriptor.of(2, 3)
R4 = RingDescriptor.of(2, 2, PolySpec((1, 1), 2))


def test_parse_matrix_text_and_json():
    assert parse_matrix("1,2;3,-1", Z8).to_int_rows() == [[1, 2], [3, 7]]
    assert parse_matrix("[[1, 2], [3, 4]]", Z8).to_int_rows() == [[1, 2], [3, 4]]
    x = parse_matrix("1+t,0;t,3", R4)
    assert x.to_int_rows() == [[[1, 1], [0, 0]], [[0, 1], [3, 0]]]
    assert parse_matrix('[[[1, 1], "t"]]', R4).to_int_rows() == [[[1, 1], [0, 1]]]


def test_parse_matrix_errors():
    with pytest.raises(DomainError):
        parse_matrix("", Z8)
    with pytest.raises(StructuralError):
        parse_matrix("1,2;3", Z8)
    with pytest.raises(DomainError):
        parse_matrix("[1, 2]", Z8)


def test_parse_ring_and_polys():
    assert parse_ring(2, 2, "1,1,1") == R4
    assert parse_ring(3, 2).value == 9
    assert [str(p) for p in parse_polys(["0,1", "-1,1"], 2)] == ["0,1", "-1,1"]
    with pytest.raises(DomainError):
        parse_polys([], 2)
    polys = parse_polys(["1,1,1"], 2)
    assert parse_targets(["1^1"], polys)[0].residue_degree == 2
    with pytest.raises(StructuralError):
        parse_targets(["1^1", "0"], polys)


def test_json_helpers(tmp_path):
    assert json.loads(to_json({"a": Fraction(1, 2), "b": Fraction(4, 2)})) == {"a": "1/2", "b": 2}
    path = tmp_path / "nested" / "data.json"
    save_json({"x": [1, 2]}, str(path))
    assert load_json(str(path)) == {"x": [1, 2]}
    assert load_json(str(tmp_path / "missing.json")) is None


def test_render_formats():
    payload = {"success": True, "count": 4, "rows": [{"a": 1, "b": "x"}, {"a": 2, "b": "y"}]}
    assert json.loads(render(payload, "json"))["count"] == 4
    assert render(payload, "csv").splitlines() == ["a,b", "1,x", "2,y"]
    plain = render(payload, "plain")
    assert "count: 4" in plain and "a\tb" in plain
    with pytest.raises(ValueError):
        render(payload, "xml")


def test_write_reports(tmp_path):
    reports = [exact_report("main3-lifts", {"p": 2, "n": 1}, 1, Fraction(1)),
               exact_report("main2-identity", {"p": 2, "n": 1}, Fraction(1, 4), Fraction(1, 3))]
    paths = write_reports(reports, str(tmp_path), "run")
    data = json.loads(open(paths["json"], encoding="utf-8").read())
    assert [r["verdict"] for r in data] == ["exact-match", "MISMATCH"]
    assert data[1]["observed"] == "1/4"
    csv_lines = open(paths["csv"], encoding="utf-8").read().strip().splitlines()
    assert csv_lines[0].startswith("name,instance,observed,predicted,verdict")
    assert len(csv_lines) == 3
