import csv
import json
import math
import pathlib

import pytest

from vortexoam.cli import build_records, run
from vortexoam.config import RunConfig, format_mj, parse_mj
from vortexoam.errors import ConfigError
from vortexoam.records import emit

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_to_file(tmp_path, argv, name="out"):
    path = tmp_path / name
    code = run(list(argv) + ["--out", str(path)])
    return code, path.read_bytes() if path.exists() else b""


# ---------------------------------------------------------------------------
# subcommand behavior
# ---------------------------------------------------------------------------


def test_y_alpha_known_value(tmp_path):
    code, data = run_to_file(
        tmp_path, ["y-alpha", "--n", "0", "--F", "2", "--G", "0", "--format", "csv"]
    )
    assert code == 0
    rows = list(csv.DictReader(data.decode().splitlines()))
    assert len(rows) == 1
    assert float(rows[0]["value"]) == pytest.approx(2.0 * math.pi * 2.0**-1.5, rel=1e-10)


def test_ledge_plus_row_count(tmp_path):
    code, data = run_to_file(tmp_path, ["ledge", "--l", "+1", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(data.decode().splitlines()))
    assert len(rows) == 6
    assert sum(1 for r in rows if r["edge"] == "L2") == 2
    assert sum(1 for r in rows if r["edge"] == "L3") == 4


def test_ledge_both_gives_twelve(tmp_path):
    code, data = run_to_file(tmp_path, ["ledge", "--l", "both", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(data.decode().splitlines()))
    assert len(rows) == 12


def test_dichroism_demo(tmp_path):
    code, data = run_to_file(tmp_path, ["dichroism", "--demo-dos", "--format", "json"])
    assert code == 0
    payload = json.loads(data)
    out = payload[0]["outputs"]
    assert out["dichroism"] == pytest.approx(out["gamma_plus"] - out["gamma_minus"])
    assert out["dichroism"] > 0


def test_dichroism_without_dos_is_config_error(tmp_path):
    code, _ = run_to_file(tmp_path, ["dichroism"])
    assert code == 2


def test_ov_matrix_default_config(tmp_path):
    code, data = run_to_file(tmp_path, ["ov-matrix", "--format", "json"])
    assert code == 0
    out = json.loads(data)[0]["outputs"]
    assert out["delta_L_satisfied"] and out["delta_n_satisfied"]
    me = out["matrix_element"]
    assert math.hypot(me["re"], me["im"]) > 0


def test_ev_matrix_default_config(tmp_path):
    code, data = run_to_file(tmp_path, ["ev-matrix", "--format", "json"])
    assert code == 0
    out = json.loads(data)[0]["outputs"]
    assert out["active_channel"] == "plus"


def test_selection_table_channels(tmp_path):
    code, data = run_to_file(
        tmp_path, ["selection-table", "--lmax", "1", "--Lmax", "1", "--format", "csv"]
    )
    assert code == 0
    rows = list(csv.DictReader(data.decode().splitlines()))
    assert len(rows) == 27  # 3 dl x 3 dL x 3 dm
    by_key = {(int(r["dl"]), int(r["dL"]), int(r["dm"])): r["active_channel"] for r in rows}
    assert by_key[(1, 0, 1)] == "plus"
    assert by_key[(-1, 0, -1)] == "minus"
    assert by_key[(0, 0, 0)] == "zero"
    assert by_key[(1, 1, 0)] == "none"


def test_verify_passes(tmp_path):
    code, data = run_to_file(tmp_path, ["verify"])
    assert code == 0
    lines = data.decode().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("invariant checks passed")


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------


def test_unknown_flag_exits_2(capsys):
    assert run(["ledge", "--bogus"]) == 2


def test_unknown_subcommand_exits_2(capsys):
    assert run(["frobnicate"]) == 2


def test_domain_error_exits_1(tmp_path, capsys):
    # F = G is a touching (singular) kernel
    code, _ = run_to_file(tmp_path, ["y-alpha", "--n", "0", "--F", "1", "--G", "1"])
    assert code == 1


def test_nonconverged_exits_3(tmp_path):
    cfg = tmp_path / "hard.toml"
    cfg.write_text(
        "[tolerance]\nabs_tol = 1e-300\nrel_tol = 1e-16\nmax_depth = 2\n"
    )
    code, _ = run_to_file(
        tmp_path,
        ["y-alpha", "--n", "0", "--F", "1.002", "--G", "1.0", "--config", str(cfg)],
    )
    assert code == 3


def test_bad_config_exits_2(tmp_path):
    cfg = tmp_path / "bad.toml"
    cfg.write_text("this is [not valid TOML")
    code, _ = run_to_file(tmp_path, ["ledge", "--config", str(cfg)])
    assert code == 2


def test_unwritable_out_exits_1(tmp_path):
    code = run(["ledge", "--l", "+1", "--out", str(tmp_path / "no" / "dir" / "out.csv")])
    assert code == 1


def test_missing_config_block_exits_2(tmp_path):
    cfg = tmp_path / "partial.toml"
    cfg.write_text("[ov]\nbeam = \"nope\"\n")
    code, _ = run_to_file(tmp_path, ["ov-matrix", "--config", str(cfg)])
    assert code == 2


# ---------------------------------------------------------------------------
# emission format
# ---------------------------------------------------------------------------


def test_emit_empty_json():
    assert emit([], "json").strip() == b"[]"


def test_emit_rejects_unknown_format():
    with pytest.raises(ConfigError):
        emit([], "xml")


def test_json_roundtrip_bit_identical(tmp_path):
    code, data = run_to_file(tmp_path, ["y-alpha", "--n", "1", "--F", "2", "--G", "1"])
    assert code == 0
    parsed = json.loads(data)
    from vortexoam.ev_coupling import y_alpha

    exact = y_alpha(1, 2.0, 1.0)
    assert parsed[0]["outputs"]["value"] == exact  # bit-identical via 17 digits


def test_golden_csv_headers(tmp_path):
    cases = {
        "y-alpha": ["y-alpha", "--n", "1", "--F", "2", "--G", "1"],
        "ledge": ["ledge", "--l", "+1"],
        "dichroism": ["dichroism", "--demo-dos"],
        "selection-table": ["selection-table", "--lmax", "1", "--Lmax", "1"],
        "ov-matrix": ["ov-matrix"],
        "ev-matrix": ["ev-matrix"],
    }
    for name, argv in cases.items():
        code, data = run_to_file(tmp_path, argv + ["--format", "csv"], name=f"{name}.csv")
        assert code == 0
        expected = (GOLDEN / f"{name}_header.csv").read_bytes()
        assert data.split(b"\n")[0] + b"\n" == expected, f"header drift in {name}"


def test_golden_ledge_full_table(tmp_path):
    code, data = run_to_file(tmp_path, ["ledge", "--l", "+1", "--format", "csv"])
    assert code == 0
    assert data == (GOLDEN / "ledge_plus_full.csv").read_bytes()


def test_record_versions_stamped():
    cfg = RunConfig.default()
    rec = build_records("ledge", cfg, {"l": "+1"})[0]
    from vortexoam import __version__

    assert rec.version == __version__
    assert rec.defaults["units"] == "atomic"


# ---------------------------------------------------------------------------
# determinism and env overrides
# ---------------------------------------------------------------------------


def test_identical_config_byte_identical_output(tmp_path):
    argv = ["dichroism", "--demo-dos", "--format", "json"]
    _, a = run_to_file(tmp_path, argv, name="a")
    _, b = run_to_file(tmp_path, argv, name="b")
    assert a == b


def test_env_out_override(tmp_path, monkeypatch):
    target = tmp_path / "env_out.json"
    monkeypatch.setenv("VORTEXOAM_OUT", str(target))
    code = run(["y-alpha", "--n", "0", "--F", "3", "--G", "1"])
    assert code == 0
    assert target.exists()
    json.loads(target.read_bytes())


def test_env_threads_echoed(tmp_path, monkeypatch):
    monkeypatch.setenv("VORTEXOAM_THREADS", "4")
    code, data = run_to_file(tmp_path, ["ledge", "--l", "+1", "--format", "json"])
    assert code == 0
    assert json.loads(data)[0]["defaults"]["threads"] == 4
    monkeypatch.setenv("VORTEXOAM_THREADS", "zero")
    code, _ = run_to_file(tmp_path, ["ledge", "--l", "+1"])
    assert code == 2


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------


def test_parse_mj_roundtrip():
    for text, two in (("+1/2", 1), ("-3/2", -3), ("5/2", 5), ("1", 2)):
        assert parse_mj(text) == two
    assert format_mj(-3) == "-3/2"
    with pytest.raises(ConfigError):
        parse_mj("1/3")


def test_full_config_file(tmp_path):
    cfg_text = """
[tolerance]
abs_tol = 1e-9
rel_tol = 1e-7
max_depth = 30

[output]
format = "csv"

[beam.pump]
kind = "optical"
l = 2
k_perp = 1.5
k_z = 0.7

[beam.in]
kind = "electron"
l = 1
k_perp = 1.0
k_z = 8.0

[beam.out]
kind = "electron"
l = 0
k_perp = 1.0
k_z = 8.0

[hydrogenic.g]
n = 1
l = 0
m = 0

[hydrogenic.e]
n = 2
l = 1
m = 1

[com.still]
K_R = 0.0
K_z = 0.0
L = 0
profile = "ring_gaussian"
rho0 = 1.5
sigma = 0.3

[com.spun]
K_R = 0.0
K_z = 0.7
L = 2
profile = "ring_gaussian"
rho0 = 1.5
sigma = 0.3

[geometry]
mode = "fixed"
F = 3.0
G = 1.0

[ov]
beam = "pump"
internal_initial = "g"
internal_final = "e"
com_initial = "still"
com_final = "spun"
n_initial = 2
n_final = 1

[ev]
beam_initial = "in"
beam_final = "out"
internal_initial = "g"
internal_final = "e"
com_initial = "still"
com_final = "still"

[dos.3d_threehalf]
"+3/2" = 1.0
"-3/2" = 1.0
"+1/2" = 1.0
"-1/2" = 1.0

[dos.3d_fivehalf]
"+5/2" = 1.0
"-5/2" = 1.0
"+3/2" = 1.0
"-3/2" = 1.0
"+1/2" = 1.0
"-1/2" = 1.0
"""
    path = tmp_path / "run.toml"
    path.write_text(cfg_text)
    from vortexoam.matter import enumerate_core_states

    cfg = RunConfig.from_toml(str(path))
    assert cfg.tolerance.rel_tol == 1e-7
    assert cfg.output_format == "csv"
    assert cfg.beams["pump"].l == 2
    for state in enumerate_core_states("3d_fivehalf"):
        assert cfg.dos.weight(state) == 1.0

    code = run(["ov-matrix", "--config", str(path), "--out", str(tmp_path / "ov.csv")])
    assert code == 0
    code = run(["ev-matrix", "--config", str(path), "--out", str(tmp_path / "ev.csv")])
    assert code == 0
    code = run(["dichroism", "--config", str(path), "--out", str(tmp_path / "d.csv")])
    assert code == 0
    rows = list(csv.DictReader((tmp_path / "d.csv").read_text().splitlines()))
    total = [r for r in rows if r["edge"] == "total"][0]
    assert abs(float(total["dichroism"])) <= 1e-10 * (
        float(total["gamma_plus"]) + float(total["gamma_minus"])
    )


def test_records_mixed_csv_rejected():
    cfg = RunConfig.default()
    a = build_records("ledge", cfg, {"l": "+1"})
    b = build_records("y-alpha", cfg, {"n": 0, "F": 2.0, "G": 0.0})
    with pytest.raises(ConfigError):
        emit(a + b, "csv")
