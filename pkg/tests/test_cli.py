import csv
import io
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from radcool.cli import run

ROOT = Path(__file__).resolve().parent.parent
COOLING = str(ROOT / "scenarios" / "slab_cooling.scn")
HEATING = str(ROOT / "scenarios" / "slab_heating.scn")
SOC = str(ROOT / "scenarios" / "soc_full_speed_heating.scn")


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def table(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_trace_contract(capsys):
    code, out, _ = invoke(capsys, "trace", "--scenario", COOLING, "--law", "exact",
                          "--t-end", "auto", "--samples", "200")
    header, rows = table(out)
    assert code == 0
    assert header == ["t_s", "T_c"]
    assert len(rows) == 200
    assert rows[0] == ["0", "45.0"]
    assert float(rows[-1][1]) == pytest.approx(25.2, abs=1e-6)


def test_compare_exact_and_oracle_agree(capsys):
    code, out, _ = invoke(capsys, "compare", "--scenario", COOLING,
                          "--laws", "exact,oracle,active,coefficient")
    header, rows = table(out)
    assert code == 0
    assert header == ["t_s", "T_exact_c", "T_oracle_c", "T_active_c", "T_coefficient_c"]
    data = np.array(rows, dtype=float)
    assert np.max(np.abs(data[:, 1] - data[:, 2])) < 1e-3 * 20.0


def test_invert_returns_times(capsys):
    code, out, _ = invoke(capsys, "invert", "--scenario", HEATING, "--temps", "25,30,40")
    header, rows = table(out)
    assert code == 0 and header == ["T_c", "t_s"]
    times = [float(r[1]) for r in rows]
    assert times[0] == 0 and times[0] < times[1] < times[2]


def test_invert_beyond_equilibrium_is_input_error(capsys):
    code, _, err = invoke(capsys, "invert", "--scenario", HEATING, "--temps", "50")
    assert code == 2 and err.startswith("error: OutOfBasin:")


def test_rmse_table(capsys):
    code, out, _ = invoke(capsys, "rmse", "--scenario", HEATING)
    header, rows = table(out)
    assert code == 0 and header == ["law", "rmse_k", "n", "window_end_s"]
    assert [r[0] for r in rows] == ["coefficient", "osullivan1", "osullivan2"]
    assert all(r[2] == "500" for r in rows)


def test_rmse_rejects_oracle(capsys):
    code, _, err = invoke(capsys, "rmse", "--scenario", HEATING, "--laws", "oracle")
    assert code == 2 and "CliError" in err


def test_oracle_native_steps_and_resampled(capsys):
    code, out, _ = invoke(capsys, "oracle", "--scenario", HEATING, "--t-end", "600")
    header, rows = table(out)
    assert code == 0 and header == ["t_s", "T_c"] and float(rows[-1][0]) == 600
    code, out, _ = invoke(capsys, "oracle", "--scenario", HEATING, "--t-end", "600", "--samples", "7")
    assert len(table(out)[1]) == 7


def test_exponential_source_auto_window(capsys):
    code, out, _ = invoke(capsys, "trace", "--scenario", SOC, "--law", "oracle", "--samples", "5")
    _, rows = table(out)
    assert code == 0
    assert float(rows[-1][1]) == pytest.approx(25.0 + 0.99 * 60.0, abs=1e-4)


def test_exact_law_refuses_exponential_source(capsys):
    code, _, err = invoke(capsys, "trace", "--scenario", SOC, "--law", "exact", "--t-end", "10")
    assert code == 2 and err.startswith("error: NonPolynomialSource:")


def test_set_override(capsys):
    code, out, _ = invoke(capsys, "trace", "--scenario", COOLING, "--set", "t_initial_c=40",
                          "--samples", "2")
    assert code == 0 and table(out)[1][0] == ["0", "40.0"]


def test_unstable_root_structure_is_numerical_failure(capsys):
    # a strong heat sink drives both real roots below absolute zero
    code, _, err = invoke(capsys, "trace", "--scenario", COOLING, "--set", "source.eta0=-1e9",
                          "--set", "h_w_per_m2k=10", "--t-end", "10")
    assert code == 1 and err.startswith("error: UnexpectedRootStructure:")


def test_rcr_sweep_rows(capsys):
    code, out, _ = invoke(capsys, "rcr-sweep", "--s-grid", "1e-3:1e-2:2:log", "--te-grid", "30:50:3")
    header, rows = table(out)
    assert code == 0
    assert header == ["S_m2", "ihg", "direction", "Te_c", "rcr", "h_negative", "error"]
    assert len(rows) == 6 and rows[0][3] == "30.0"


def test_dtau_sweep_parallel_matches_serial(capsys):
    args = ["dtau-sweep", "--s-grid", "1e-3:5e-2:2:log", "--te-grid", "30:60:3", "--ihg", "min"]
    _, serial, _ = invoke(capsys, *args)
    _, parallel, _ = invoke(capsys, *args, "--workers", "2")
    assert serial == parallel


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = invoke(capsys, "trace", "--scenario", COOLING, "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("t_s,T_c\n0,45.0\n")


@pytest.mark.parametrize("argv, name", [
    (["trace"], "CliError"),
    (["trace", "--scenario", "/nonexistent.scn"], "ScenarioFileError"),
    (["trace", "--scenario", COOLING, "--law", "magic"], "CliError"),
    (["trace", "--scenario", COOLING, "--samples", "1"], "CliError"),
    (["trace", "--scenario", COOLING, "--t-end", "-5"], "CliError"),
    (["trace", "--scenario", COOLING, "--set", "emissivity=2"], "InvalidScenario"),
    (["oracle", "--scenario", COOLING, "--rel-tol", "1"], "ValueError"),
    (["rcr-sweep", "--s-grid", "1:0:3"], "InputError"),
])
def test_input_errors_exit_two(capsys, argv, name):
    code, out, err = invoke(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith(f"error: {name}:")


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["trace", "--bogus"])
    assert exc.value.code == 2


def test_repeat_runs_are_identical(capsys):
    args = ["compare", "--scenario", HEATING, "--laws", "exact,oracle,osullivan2"]
    assert invoke(capsys, *args)[1] == invoke(capsys, *args)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "radcool", "trace", "--scenario", COOLING,
                           "--samples", "3"], capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[:2] == ["t_s,T_c", "0,45.0"]


@pytest.mark.parametrize("passed, status", [(True, 0), (False, 1)])
def test_check_exit_status(capsys, monkeypatch, passed, status):
    from radcool import checks
    fake = [checks.CheckResult(1, "stub", passed, "detail")]
    monkeypatch.setattr(checks, "run_checks", lambda: fake)
    code, out, _ = invoke(capsys, "check")
    assert code == status
    assert out == f"{'PASS' if passed else 'FAIL'} [1] stub: detail\n"
