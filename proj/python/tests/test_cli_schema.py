import json
import os
import subprocess
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

CLI = os.environ.get("HYPOSTAB_CLI")
ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = Path(os.environ.get("HYPOSTAB_SCHEMA_DIR", ROOT / "schemas"))
DATA = ROOT / "data"

pytestmark = pytest.mark.skipif(not CLI, reason="HYPOSTAB_CLI not set")


def run(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def validate(doc, name):
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{name}.schema.json").read_text()))


@pytest.mark.parametrize(
    "args, schema",
    [
        (["hc-index", str(DATA / "matrices" / "staircase3.json")], "hc_report"),
        (["hc-index", str(DATA / "matrices" / "rotation.json")], "hc_report"),
        (["hc-index", str(DATA / "matrices" / "complex_damped.json")], "hc_report"),
        (["det-leading", "--p", "8"], "det_leading"),
        (["sweep", "--p", "8", "--epsilon", "0.027", "--grid", "32"], "sweep"),
        (["verdict", "--tableau", str(DATA / "tableaux" / "heun.json"), "--family", "--precision-bits", "256"],
         "verdict"),
        (["decay-fit", "--staircase", "3"], "decay_fit"),
        (["lasm-check", "--p", "4", "--m", "1", "--samples", "3", "--precision-bits", "256"], "lasm_report"),
        (["reproduce-paper", "--grid", "64", "--samples", "3", "--precision-bits", "512"], "reproduce"),
    ],
)
def test_cli_json_matches_schema(args, schema):
    validate(run(*args), schema)


def test_curve_csv(tmp_path):
    out = tmp_path / "curve.csv"
    run("sweep", "--p", "4", "--epsilon", "0.304", "--grid", "16", "--csv", str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == "tau,norm,excess"
    assert len(lines) == 17


@pytest.mark.parametrize(
    "args",
    [
        ["sweep", "--p", "4", "--epsilon", "0.304", "--grid", "32", "--threads", "1"],
        ["sweep", "--p", "4", "--epsilon", "0.304", "--grid", "32", "--threads", "4"],
        ["lasm-check", "--p", "4", "--m", "1", "--samples", "3", "--seed", "11", "--precision-bits", "256"],
        ["decay-fit", "--staircase", "2", "--format", "csv"],
    ],
)
def test_cli_output_is_deterministic(args):
    outputs = {subprocess.run([CLI, *args], capture_output=True, text=True, check=True).stdout
               for _ in range(2)}
    assert len(outputs) == 1


def test_sweep_independent_of_thread_count():
    base = ["sweep", "--p", "4", "--epsilon", "0.304", "--grid", "32"]
    assert run(*base, "--threads", "1") == run(*base, "--threads", "3")
