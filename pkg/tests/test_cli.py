import json
import random

from click.testing import CliRunner

from folioselect import save
from folioselect.cli import cli
from helpers import random_workspace
from test_evaluate import add, alternative, simple_workspace
from test_model import make_project
from folioselect import ImpactCoefficients, Workspace

CSV_HEADER = "id,name,status,cost,duration,value,risk,alignment"


def write_workspace(tmp_path, ws, name="ws.json"):
    path = tmp_path / name
    save(ws, path)
    return str(path)


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_classify_table_and_records(tmp_path):
    ws = simple_workspace()
    path = write_workspace(tmp_path, ws)
    table = invoke("classify", path)
    assert table.exit_code == 0
    assert "rubric" in table.output and "P1" in table.output

    records = invoke("classify", path, "--format", "records")
    assert records.exit_code == 0
    lines = [json.loads(line) for line in records.output.splitlines()]
    assert len(lines) == 4
    assert {line["project_id"] for line in lines} == {"P1", "P2", "C1", "C2"}
    assert all({"rubric", "decision", "signs", "margin"} <= set(line) for line in lines)


def test_classify_preferred_pair_flag(tmp_path):
    path = write_workspace(tmp_path, simple_workspace())
    out = invoke("classify", path, "--preferred-pair", "risk_value", "--format", "records")
    assert out.exit_code == 0


def test_evaluate_prints_parameters(tmp_path):
    ws = simple_workspace().upsert_alternative(
        alternative([add("C1", {"P1": ImpactCoefficients(cost_factor=1.2)})], alt_id="A1")
    )
    path = write_workspace(tmp_path, ws)
    table = invoke("evaluate", path, "--alternative", "A1")
    assert table.exit_code == 0
    assert "V_sp" in table.output and "C_G" in table.output

    records = invoke("evaluate", path, "--alternative", "A1", "--format", "records")
    lines = [json.loads(line) for line in records.output.splitlines()]
    assert lines[0]["record"] == "summary"
    assert any(line["record"] == "projection" and line["project_id"] == "P1" for line in lines[1:])


def test_evaluate_unknown_alternative_exits_3(tmp_path):
    path = write_workspace(tmp_path, simple_workspace())
    out = invoke("evaluate", path, "--alternative", "nope")
    assert out.exit_code == 3


def test_enumerate_records(tmp_path):
    path = write_workspace(tmp_path, simple_workspace())
    out = invoke("enumerate", path, "--candidates", "C1,C2", "--format", "records")
    assert out.exit_code == 0
    lines = [json.loads(line) for line in out.output.splitlines()]
    assert len(lines) == 4


def test_enumerate_cap_exits_5(tmp_path):
    ws = Workspace(
        projects=tuple(make_project(f"C{i:02d}", status="candidate") for i in range(4))
    )
    path = write_workspace(tmp_path, ws)
    out = invoke("enumerate", path, "--candidates", "C00,C01,C02,C03", "--cap", "3")
    assert out.exit_code == 5
    assert "cap" in out.output


def test_pareto_marks_frontier(tmp_path):
    ws = simple_workspace()
    ws = ws.upsert_alternative(alternative([add("C1")], alt_id="A1"))
    ws = ws.upsert_alternative(
        alternative([add("C2", {"P1": ImpactCoefficients(cost_factor=1.5)})], alt_id="A2")
    )
    path = write_workspace(tmp_path, ws)
    out = invoke("pareto", path, "--format", "records")
    assert out.exit_code == 0
    lines = {line["id"]: line for line in map(json.loads, out.output.splitlines())}
    assert lines["A1"]["on_frontier"] is True
    assert lines["A2"]["on_frontier"] is False
    assert lines["A2"]["dominated_by"] == ["A1"]


def test_import_creates_and_extends_workspace(tmp_path):
    csv_path = tmp_path / "projects.csv"
    csv_path.write_text(CSV_HEADER + "\nP1,Alpha,ongoing,100,12,7,2,9\n", encoding="utf-8")
    ws_path = tmp_path / "fresh.json"
    out = invoke("import", str(csv_path), "--into", str(ws_path))
    assert out.exit_code == 0
    assert ws_path.exists()

    csv2 = tmp_path / "more.csv"
    csv2.write_text(CSV_HEADER + "\nC1,Beta,candidate,10,2,9,1,9\n", encoding="utf-8")
    out = invoke("import", str(csv2), "--into", str(ws_path))
    assert out.exit_code == 0
    listing = invoke("classify", str(ws_path), "--format", "records")
    ids = {json.loads(line)["project_id"] for line in listing.output.splitlines()}
    assert ids == {"P1", "C1"}


def test_import_rejects_colliding_ids_with_exit_2(tmp_path):
    csv_path = tmp_path / "projects.csv"
    csv_path.write_text(CSV_HEADER + "\nP1,Alpha,ongoing,100,12,7,2,9\n", encoding="utf-8")
    ws_path = tmp_path / "ws.json"
    assert invoke("import", str(csv_path), "--into", str(ws_path)).exit_code == 0
    again = invoke("import", str(csv_path), "--into", str(ws_path))
    assert again.exit_code == 2


def test_validate_clean_and_dirty(tmp_path):
    clean = write_workspace(tmp_path, random_workspace(random.Random(8)), "clean.json")
    assert invoke("validate", clean).exit_code == 0

    dirty_path = tmp_path / "dirty.json"
    doc = json.loads((tmp_path / "clean.json").read_bytes())
    doc["thresholds"]["risk_ref"] = 0
    dirty_path.write_text(json.dumps(doc), encoding="utf-8")
    out = invoke("validate", str(dirty_path))
    assert out.exit_code == 2
    assert "positive-threshold" in out.output

    records = invoke("validate", str(dirty_path), "--format", "records")
    assert records.exit_code == 2
    assert json.loads(records.output.splitlines()[0])["rule"] == "positive-threshold"


def test_malformed_workspace_exits_4(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert invoke("classify", str(bad)).exit_code == 4
    assert invoke("validate", str(bad)).exit_code == 4


def test_missing_file_exits_7(tmp_path):
    out = invoke("classify", str(tmp_path / "absent.json"))
    assert out.exit_code == 7
