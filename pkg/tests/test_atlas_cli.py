import json
import subprocess
import sys

import pytest

from paratlas import atlas as atlas_mod
from paratlas import tables


def run_cli(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "paratlas.cli", *args],
        capture_output=True,
        text=True,
        **kw,
    )


def test_zonotopal_records(zonotopal_records):
    assert len(zonotopal_records) == 17
    assert all(r.kind == "zonotopal" for r in zonotopal_records)
    by_label = {r.graph_label: r for r in zonotopal_records}
    assert by_label["K5"].m == 10
    assert by_label["K5"].f_vector == (120, 240, 150, 30)
    assert by_label["4x1"].f_vector == (16, 32, 24, 8)
    assert by_label["K33*"].f_vector == (102, 216, 144, 30)


def test_table1_matches_records(zonotopal_records):
    t1 = {r.graph_label: r.m for r in tables.TABLE1}
    assert len(t1) == 17
    for rec in zonotopal_records:
        assert rec.m == t1[rec.graph_label]


def test_atlas_json_round_trip(zonotopal_records):
    atl = atlas_mod.Atlas(
        records=sorted(zonotopal_records, key=atlas_mod._record_order),
        version=atlas_mod.VERSION,
        provenance={"tool": f"paratlas {atlas_mod.VERSION}"},
    )
    text = atlas_mod.atlas_to_json(atl)
    back = atlas_mod.atlas_from_json(text)
    assert atlas_mod.atlas_to_json(back) == text
    assert [r.id for r in back.records] == [r.id for r in atl.records]


def test_emit_table_tsv_format():
    text = atlas_mod.emit_table(1)
    lines = text.split("\n")
    assert lines[-1] == ""  # trailing newline
    rows = [ln.split("\t") for ln in lines[:-1]]
    assert rows[0] == ["N_D", "m", "G"]
    assert len(rows) == 18
    assert all(len(r) == 3 for r in rows)


def test_emit_table2_json():
    payload = json.loads(atlas_mod.emit_table(2, "json"))
    assert len(payload) == 35


def test_cli_tables_deterministic(tmp_path):
    a = run_cli("tables", "2")
    b = run_cli("tables", "2")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert "\t" in a.stdout


def test_cli_enumerate_zonotopal_show_export(tmp_path):
    out = tmp_path / "zon.json"
    r = run_cli("enumerate", "zonotopal", "--out", str(out))
    assert r.returncode == 0
    payload = json.loads(out.read_text())
    assert len(payload["records"]) == 17

    some_id = payload["records"][0]["id"]
    shown = run_cli("show", "--id", some_id, "--atlas", str(out))
    assert shown.returncode == 0
    assert json.loads(shown.stdout)["id"] == some_id

    exported = tmp_path / "copy.json"
    r2 = run_cli("export", "--in", str(out), "--out", str(exported))
    assert r2.returncode == 0
    assert exported.read_text() == out.read_text()


def test_cli_show_unknown_id(tmp_path):
    out = tmp_path / "zon.json"
    assert run_cli("enumerate", "zonotopal", "--out", str(out)).returncode == 0
    r = run_cli("show", "--id", "no-such-record", "--atlas", str(out))
    assert r.returncode == 2


def test_cli_usage_errors():
    assert run_cli("show").returncode == 2  # missing --id
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("export", "--in", "/nonexistent/atlas.json").returncode == 2


def test_cli_verify_unext():
    r = run_cli("verify", "unext")
    assert r.returncode == 0
    assert "[unext] PASS" in r.stdout
