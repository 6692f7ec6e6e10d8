import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import hypostab

jsonschema = pytest.importorskip("jsonschema")

SCHEMAS = Path(os.environ.get("HYPOSTAB_SCHEMA_DIR", Path(__file__).resolve().parents[2] / "schemas"))
DATA = Path(__file__).resolve().parents[2] / "data"


def validate(doc, name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.validate(doc, schema)


def test_hc_index_staircase():
    for n in range(1, 5):
        report = hypostab.hc_index(hypostab.staircase(n))
        validate(report, "hc_report")
        assert report["hc_index"] == n - 1
        assert report["asymptotically_stable"]


def test_matrix_inputs_accept_fractions_and_complex():
    m = [[Fraction(-1), {"re": "0", "im": "1"}], [{"re": "0", "im": "1"}, -1]]
    report = hypostab.hc_index(m)
    assert report["hc_index"] == 0


def test_det_leading_p4():
    out = hypostab.det_leading(4)
    validate(out, "det_leading")
    assert out["order"] == 9
    assert out["coeff"] == "-1/216"
    assert hypostab.closed_form_c(4) == Fraction(-1, 216)


def test_invalid_order_has_kind():
    with pytest.raises(hypostab.HypostabError) as err:
        hypostab.det_leading(6)
    assert err.value.kind == "InvalidOrder"
    assert "divisible by 4" in str(err.value)


def test_float_entries_are_rejected():
    with pytest.raises(hypostab.HypostabError) as err:
        hypostab.hc_index([["0.5"]])
    assert err.value.kind == "Parse"


def test_sweep_p4():
    out = hypostab.sweep(4, "0.304", grid=64, precision_bits=512, keep_curve=True)
    validate(out, "sweep")
    assert out["max_excess_sci"].startswith("1.29e-06")
    assert len(out["curve"]) == 64


def test_stability_function_from_tableau():
    tableau = json.loads((DATA / "tableaux" / "rk4.json").read_text())
    out = hypostab.stability_function(tableau=tableau)
    validate(out, "stability_function")
    assert out["order"] == 4
    assert out["coefficients"][-1] == "1/24"


def test_verdicts():
    v4 = hypostab.verdict(4, matrices=[hypostab.staircase(3)], precision_bits=512)
    validate(v4, "verdict")
    assert v4["status"] == "CounterexampleFound"
    v3 = hypostab.verdict(3, family=True, precision_bits=512)
    validate(v3, "verdict")
    assert v3["status"] == "NoViolationOnTestSet"


def test_decay_fit():
    fit = hypostab.decay_fit(hypostab.staircase(2))
    validate(fit, "decay_fit")
    assert abs(float(fit["a_est"]["value"]) - 3) < 0.15


def test_lasm_check():
    rep = hypostab.lasm_check(3, 1, samples=4, seed=5, precision_bits=256)
    validate(rep, "lasm_report")
    assert rep["violations"] == 0
    assert rep["matches_expectation"]


def test_input_files_match_schemas():
    for path in (DATA / "tableaux").glob("*.json"):
        validate(json.loads(path.read_text()), "tableau")
    validate(json.loads((DATA / "matrices" / "staircase3.json").read_text()), "matrix")
    validate(json.loads((DATA / "matrices" / "complex_damped.json").read_text()), "matrix")
