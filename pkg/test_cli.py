import json
from io import StringIO

import pytest

from cokernel_runner import run
from formulas import LimitValue, ProblemInstance, main_limit
from matrix_ops import RingMatrix
from module_theory import ModuleType
from normal_form import cokernel_via_lee, underlying_group
from ring_core import PolySpec, RingDescriptor
from utils.constants import EXIT_BUDGET, EXIT_INVALID, EXIT_OK, VERDICT_EXACT_MATCH


def _run(*argv):
    stream = StringIO()
    code = run(list(argv), stream=stream)
    return code, stream.getvalue()


def _run_json(*argv):
    code, text = _run(*argv)
    return code, json.loads(text)


def test_cok_over_the_extension():
    code, out = _run_json("cok", "--p", "2", "--mod-exp", "2", "--poly", "1,1,1", "--matrix", "0,1;1,1")
    assert code == EXIT_OK
    assert out["exponents"] == [0, 1]
    assert out["type"] == "1^1"
    assert out["q"] == 4
    assert out["underlying_group"]["type"] == "1^2"
    assert out["transport_agrees"] is True


def test_cok_json_reads_back_as_module_types():
    _, out = _run_json("cok", "--p", "2", "--mod-exp", "2", "--poly", "1,1,1", "--matrix", "0,1;1,1")
    poly = PolySpec.parse("1,1,1", 2)
    x = RingMatrix.from_rows(RingDescriptor.of(2, 2), [[0, 1], [1, 1]])
    g = ModuleType.parse(out["type"], poly.degree)
    assert g == cokernel_via_lee(x, poly)
    assert g.residue_rank() == out["residue_rank"]
    assert ModuleType.parse(out["underlying_group"]["type"]) == underlying_group(g)


def test_cok_plain_matrix():
    code, out = _run_json("cok", "--p", "3", "--mod-exp", "2", "--matrix", "3,0;0,1")
    assert code == EXIT_OK
    assert out["type"] == "1^1"
    assert out["order"] == 3


def test_count_joint():
    code, out = _run_json("count", "--p", "2", "--N", "1", "--n", "2", "--poly", "0,1", "--poly", "-1,1",
                          "--target", "1^1", "--target", "1^1")
    assert code == EXIT_OK
    assert out["count"] == 4


def test_count_below_generator_bound_warns():
    code, out = _run_json("count", "--p", "2", "--N", "1", "--n", "1", "--poly", "0,1", "--poly", "1,1",
                          "--target", "1^1", "--target", "1^1")
    assert code == EXIT_OK
    assert out["count"] == "1/2"
    assert out["warnings"]


def test_count_over_the_extension():
    code, out = _run_json("count", "--formula", "l1deg1", "--q", "4", "--N", "1", "--n", "1", "--target", "1^1")
    assert code == EXIT_OK
    assert out["count"] == 3


def test_limit():
    code, out = _run_json("limit", "--p", "2", "--poly", "0,1", "--target", "0", "--tol", "1e-9")
    assert code == EXIT_OK
    assert out["value"] == pytest.approx(0.2887880951, abs=1e-9)
    assert out["truncation_index"] == 31
    value = LimitValue(out["value"], out["truncation_index"])
    assert value == main_limit(ProblemInstance.parse(2, 0, 1, ["0,1"], ["0"]), 1e-9)


def test_snf_with_minors():
    code, out = _run_json("snf", "--p", "2", "--mod-exp", "3", "--matrix", "2,4;6,4", "--minors")
    assert code == EXIT_OK
    assert out["exponents"] == [1, 3]
    assert out["saturated"] is True
    assert out["minor_valuations"] == [1, 4]
    assert out["minor_identity"] is True


def test_aut_with_oracle():
    code, out = _run_json("aut", "--type", "2^1,1^1", "--q", "2", "--oracle")
    assert code == EXIT_OK
    assert out["aut"] == out["oracle"] == 8


def test_enumerate_lifts_matches():
    code, out = _run_json("enumerate", "--mode", "lifts", "--p", "2", "--N", "1", "--n", "2", "--poly", "1,1,1",
                          "--target", "1^1", "--xbar", "0,1;1,1", "--workers", "1")
    assert code == EXIT_OK
    assert out["observed"] == 12
    assert out["verdict"] == VERDICT_EXACT_MATCH


def test_reducible_polynomial_is_invalid():
    code, out = _run_json("count", "--p", "2", "--N", "1", "--n", "1", "--poly", "1,0,1", "--target", "1^1")
    assert code == EXIT_INVALID
    assert out["success"] is False
    assert out["error_type"] == "DomainError"


def test_budget_is_enforced():
    code, out = _run_json("enumerate", "--mode", "full", "--p", "2", "--N", "1", "--n", "3", "--poly", "0,1",
                          "--target", "0", "--budget-log2", "10", "--workers", "1")
    assert code == EXIT_BUDGET
    assert out["error_type"] == "BudgetExceeded"


def test_missing_argument_is_invalid():
    code, _ = _run("snf", "--matrix", "1")
    assert code == EXIT_INVALID


def test_csv_output():
    code, text = _run("rank-census", "--p", "2", "--n", "2", "--poly", "0,1", "--format", "csv", "--workers", "1")
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert lines[0] == "ranks,count,probability,limit,formula"
    assert len(lines) == 4
    assert lines[1].startswith("0,6,3/8,")


def test_output_file(tmp_path):
    target = tmp_path / "out" / "aut.json"
    code, text = _run("aut", "--type", "1^2", "--q", "2", "--out", str(target))
    assert code == EXIT_OK
    assert text == ""
    assert json.loads(target.read_text())["aut"] == 6


def test_verify_quick_subset(tmp_path):
    code, out = _run_json("verify", "--quick", "--only", "rank", "--report-dir", str(tmp_path), "--workers", "1")
    assert code == EXIT_OK
    assert out["mismatch"] is False
    assert [row["check"] for row in out["rows"]] == ["rank counts"]
    assert out["rows"][0]["status"] == "PASS"
    assert len(list(tmp_path.iterdir())) == 2
