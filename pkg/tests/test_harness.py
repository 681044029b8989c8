import csv
import io
import json

import pytest

from pseudogamma import classical
from pseudogamma.cli import main
from pseudogamma.ee_num import from_cartesian
from pseudogamma.config import build_config, load_toml
from pseudogamma.errors import ConfigError
from pseudogamma.grid import GridSpec



def _parts(z: complex) -> tuple[float, float]:
    return z.real, z.imag


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "args,code",
    [
        (["verify", "theorem1"], 0),
        (["verify", "theorem1", "--regime", "toy"], 0),
        (["verify", "funceq", "--regime", "toy"], 0),
        (["verify", "prop2", "--regime", "toy"], 0),
        (["verify", "factors", "--regime", "toy", "--R", "6", "--k-override", "2"], 1),
        (["eval", "zeta", "1"], 2),
        (["eval", "gamma", "--s", "-3"], 2),
        (["eval", "nabla", "0.5", "--regime", "paper", "--k-override", "5"], 2),
        (["eval", "nabla", "1", "--regime", "paper", "--precision", "standard"], 2),
        (["eval", "nabla", "1", "--regime", "toy", "--R", "4"], 2),
        (["scan", "nabla", "--regime", "toy", "--grid-kind", "circle", "--radius", "0"], 2),
        (["verify", "theorem1", "--omega", "2"], 2),
    ],
)
def test_exit_codes(args, code, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    got, _, err = run(args, capsys)
    assert got == code
    if code == 2:
        assert err.startswith("pseudogamma: error:") and err.count("\n") == 1


def test_diagnostic_names_the_formula(capsys):
    _, _, err = run(["eval", "zeta", "1"], capsys)
    assert "pole at s = 1" in err


def test_eval_output(capsys):
    code, out, _ = run(["eval", "nabla", "0.5"], capsys)
    assert code == 0
    assert out.splitlines() == ["nabla(0.5) = 1", "log_mod = 0.0", "arg = 0.0"]
    _, out, _ = run(["eval", "gamma", "5"], capsys)
    head, value = out.splitlines()[0].split(" = ")
    assert head == "gamma(5)" and float(value) == pytest.approx(24.0, rel=1e-15)


def test_verify_reports_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(["verify", "symmetry", "--regime", "toy", "--out", str(path)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    meta = json.loads((tmp_path / "a.json.meta.json").read_text())
    assert {"created_utc", "wall_time_s", "kernel_backend"} <= set(meta)
    doc = json.loads(a.read_text())
    assert doc["summary"]["all_asserted_hold"]
    for check in doc["checks"]:
        assert {"name", "paper_eq", "lhs", "rhs", "margin", "holds", "regime", "k_override_active"} <= set(check)
        assert check["regime"] == "toy" and check["k_override_active"]


def test_paper_theorem_report_contents(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert run(["verify", "theorem1", "--out", str(out)], capsys)[0] == 0
    doc = json.loads(out.read_text())
    (check,) = doc["checks"]
    assert check["holds"] and check["regime"] == "paper" and not check["k_override_active"]
    assert doc["params"]["K"] == 159


def test_scan_zeta_on_vertical_line_is_bit_for_bit(capsys):
    code, out, _ = run(["scan", "zeta", "--axis", "imag", "--fixed", "2", "--start", "-10", "--end", "10",
                        "--count", "21", "--policy", "closed"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 21
    for row in rows:
        s = complex(float(row["re_s"]), float(row["im_s"]))
        assert s.real == 2.0
        point = from_cartesian(*_parts(classical.zeta_hasse(s)))
        assert float(row["log_mod"]) == point.log_mod + point.lo
        assert float(row["arg"]) == point.arg
    again = run(["scan", "zeta", "--axis", "imag", "--fixed", "2", "--start", "-10", "--end", "10",
                 "--count", "21", "--policy", "closed"], capsys)[1]
    assert again == out


def test_scan_extra_column_on_theorem_interval(capsys):
    code, out, _ = run(["scan", "nabla", "--regime", "toy", "--count", "8"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert all(float(r["extra"]) > 0 for r in rows)


def test_scan_records_point_errors(capsys):
    code, out, _ = run(["scan", "zeta", "--start", "0.5", "--end", "1.5", "--count", "3", "--policy", "closed"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[1]["error"].startswith("PoleAtOne") and rows[0]["error"] == ""


def test_toml_config_and_precedence(tmp_path):
    cfg_file = tmp_path / "run.toml"
    cfg_file.write_text(
        '[params]\nregime = "toy"\nR = 316.0\nk_override = 6\n\n[grid]\ncount = 16\n\n[checks]\nseed = 7\n'
    )
    data = load_toml(cfg_file)
    cfg = build_config(data, {"k_override": 9})
    assert cfg.R == 316.0 and cfg.k_override == 9 and cfg.seed == 7 and cfg.grid.count == 16
    assert cfg.precision == "standard"


def test_toml_schema_errors(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text('[params]\nR = "big"\n')
    with pytest.raises(ConfigError):
        load_toml(bad)
    bad.write_text("[nonsense]\nx = 1\n")
    with pytest.raises(ConfigError):
        load_toml(bad)
    bad.write_text("not toml = = =")
    with pytest.raises(ConfigError):
        load_toml(bad)


def test_config_file_via_cli(tmp_path, capsys):
    cfg_file = tmp_path / "run.toml"
    cfg_file.write_text('[params]\nregime = "toy"\n\n[output]\nout = "%s"\n' % (tmp_path / "r.json").as_posix())
    assert run(["verify", "theorem1", "--config", str(cfg_file)], capsys)[0] == 0
    assert json.loads((tmp_path / "r.json").read_text())["config"]["regime"] == "toy"


def test_grid_validation():
    with pytest.raises(ConfigError):
        GridSpec.circle(0.0, 8)
    with pytest.raises(ConfigError):
        GridSpec(kind="interval", count=1)
    closed = GridSpec(kind="interval", count=3, start=0.0, end=1.0, endpoint_policy="closed").real_points()
    assert closed == [0.0, 0.5, 1.0]
