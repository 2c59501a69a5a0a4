import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

import majorana_lab.cli as cli_mod
from csv_utils import parse_csv, rows_as_floats
from majorana_lab.cli import (
    CONFIG_ENV_VAR,
    EXIT_BBM_VIOLATION,
    EXIT_QUAD_NONCONVERGENCE,
    EXIT_TRUNCATION_BUDGET,
    main,
)
from majorana_lab.entropy import BBM_BOUND, BoundViolation


@pytest.fixture
def runner():
    return CliRunner()


def run_ok(runner, args, env=None):
    result = runner.invoke(main, args, env=env)
    assert result.exit_code == 0, f"{args} failed: {result.output}\n{result.exception!r}"
    return result


def combined_output(result):
    try:
        return result.output + result.stderr
    except (ValueError, AttributeError):
        return result.output


# ---------------------------------------------------------------- table1


def test_table1_default_rows(runner, tmp_path):
    out = tmp_path / "table1.csv"
    run_ok(runner, ["table1", "--out", str(out)])
    header, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    assert columns == ["n", "omega", "S_y", "S_p", "S_sum", "bbm_bound"]
    assert len(rows) == 12
    assert header["n_list"] == "0,1,2,3"
    assert float(header["theta"]) == pytest.approx(math.pi / 4, rel=1e-15)

    values = {(int(r[0]), float(r[1])): (float(r[2]), float(r[3]), float(r[4])) for r in rows}
    s_y, s_p, total = values[(3, 0.4)]
    assert s_y == pytest.approx(2.18107, abs=2e-4)
    assert s_p == pytest.approx(1.26477, abs=2e-4)
    s_y, s_p, total = values[(0, 0.8)]
    assert s_y == pytest.approx(1.18394, abs=2e-4)
    assert s_p == pytest.approx(0.96079, abs=2e-4)
    # the sum column is constant within each level
    for n in range(4):
        sums = [values[(n, om)][2] for om in (0.2, 0.4, 0.8)]
        assert max(sums) - min(sums) < 1e-6
    assert all(float(r[5]) == pytest.approx(BBM_BOUND, rel=1e-15) for r in rows)


def test_table1_deterministic_and_17_digit(runner, tmp_path):
    out = tmp_path / "a.csv"
    run_ok(runner, ["table1", "--n", "0", "--n", "1", "--omega", "0.3", "--out", str(out)])
    first = out.read_bytes()
    run_ok(runner, ["table1", "--n", "0", "--n", "1", "--omega", "0.3", "--out", str(out)])
    assert out.read_bytes() == first
    _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    for row in rows:
        for field in row[2:]:
            assert f"{float(field):.17g}" == field  # 17-significant-digit round trip


def test_table1_json_mirrors_csv(runner, tmp_path):
    csv_path, json_path = tmp_path / "t.csv", tmp_path / "t.json"
    args = ["table1", "--n", "1", "--omega", "0.4", "--omega", "0.8"]
    run_ok(runner, args + ["--out", str(csv_path)])
    run_ok(runner, args + ["--format", "json", "--out", str(json_path)])
    _, columns, rows = parse_csv(csv_path.read_text(encoding="utf-8"))
    payload = json.loads(json_path.read_text(encoding="utf-8"))
    assert payload["command"] == "table1"
    assert payload["columns"] == columns
    assert len(payload["rows"]) == len(rows) == 2
    for json_row, csv_row in zip(payload["rows"], rows):
        for name, text in zip(columns, csv_row):
            assert json_row[name] == pytest.approx(float(text), rel=1e-15)


def test_table1_bbm_violation_exit_code(runner, monkeypatch):
    def explode(n, omega, theta, tol):
        raise BoundViolation("forced for the exit-code contract")

    monkeypatch.setattr(cli_mod, "bbm_report", explode)
    result = runner.invoke(main, ["table1"])
    assert result.exit_code == EXIT_BBM_VIOLATION


def test_quadrature_failure_exit_code(runner):
    result = runner.invoke(main, ["table1", "--n", "0", "--omega", "0.2", "--tol", "1e-300"])
    assert result.exit_code == EXIT_QUAD_NONCONVERGENCE


# ---------------------------------------------------------------- density


def test_density_nodes_match_hermite_roots(runner, tmp_path):
    out = tmp_path / "d.csv"
    run_ok(runner, ["density", "--n", "2", "--omega", "0.2", "--theta", str(math.pi / 2),
                    "--grid", "2001", "--out", str(out)])
    _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    assert columns == ["y", "density"]
    data = np.array(rows_as_floats(columns, rows, "y", "density"))
    # nodes live inside the classical region; the Gaussian tail is near-zero too
    keep = np.abs(data[:, 0]) < 1.2 * math.sqrt(5 / 0.2)
    ys, rho = data[keep, 0], data[keep, 1]
    spacing = ys[1] - ys[0]
    near_zero = rho < 1e-4 * rho.max()
    near_zero[0] = near_zero[-1] = False
    starts = np.flatnonzero(near_zero & ~np.roll(near_zero, 1))
    ends = np.flatnonzero(near_zero & ~np.roll(near_zero, -1))
    assert len(starts) == 2  # contiguous runs of near-zero samples = nodes
    expected = 1.0 / math.sqrt(2 * 0.2)  # positive root of H_2(sqrt(omega) y)
    centers = sorted((ys[a] + ys[b]) / 2.0 for a, b in zip(starts, ends))
    assert abs(centers[0] + expected) < 2 * spacing
    assert abs(centers[1] - expected) < 2 * spacing


def test_density_symmetry_and_peak(runner, tmp_path):
    out = tmp_path / "d0.csv"
    run_ok(runner, ["density", "--n", "0", "--omega", "0.4", "--grid", "401", "--out", str(out)])
    _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    data = np.array(rows_as_floats(columns, rows, "y", "density"))
    rho = data[:, 1]
    assert np.argmax(rho) == 200  # peak at y = 0
    assert np.allclose(rho, rho[::-1], rtol=1e-12, atol=1e-300)


def test_density_momentum_space_column(runner, tmp_path):
    out = tmp_path / "dp.csv"
    run_ok(runner, ["density", "--n", "1", "--omega", "0.2", "--space", "momentum",
                    "--grid", "51", "--out", str(out)])
    _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    assert columns == ["p", "density"]
    assert len(rows) == 51


def test_density_accepts_slope_parameterization(runner, tmp_path):
    out = tmp_path / "dk.csv"
    run_ok(runner, ["density", "--n", "0", "--k", "0.3", "--grid", "11", "--out", str(out)])
    header, _, _ = parse_csv(out.read_text(encoding="utf-8"))
    assert float(header["omega"]) == pytest.approx(0.3, rel=1e-15)
    assert float(header["k"]) == pytest.approx(0.3, rel=1e-15)


# ---------------------------------------------------------------- entropy density


def test_entropy_density_zero_at_nodes(runner, tmp_path):
    out = tmp_path / "ed.csv"
    run_ok(runner, ["entropy-density", "--n", "1", "--omega", "0.4", "--theta", str(math.pi / 2),
                    "--grid", "801", "--out", str(out)])
    _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    assert columns == ["omega", "y", "entropic_density"]
    data = np.array(rows_as_floats(columns, rows, "y", "entropic_density"))
    mid = np.argmin(np.abs(data[:, 0]))  # H_1 node at the origin
    assert abs(data[mid, 1]) < 1e-6


def test_entropy_density_localization(runner, tmp_path):
    def half_width(space):
        out = tmp_path / f"ed_{space}.csv"
        run_ok(runner, ["entropy-density", "--n", "1", "--omega", "0.2", "--omega", "0.8",
                        "--space", space, "--grid", "1201", "--out", str(out)])
        _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
        data = np.array(rows_as_floats(columns, rows, "omega", columns[1], "entropic_density"))
        widths = {}
        for om in (0.2, 0.8):
            block = data[data[:, 0] == om]
            magnitude = np.abs(block[:, 2])
            support = np.abs(block[magnitude > 0.01 * magnitude.max(), 1])
            widths[om] = support.max()
        return widths

    position = half_width("position")
    assert position[0.8] < position[0.2]  # stiffer potential localizes y-space
    momentum = half_width("momentum")
    assert momentum[0.8] > momentum[0.2]  # and broadens p-space


# ---------------------------------------------------------------- heatmap


def test_heatmap_mass_and_period(runner, tmp_path):
    omega, n = 0.2, 1
    period = 2 * math.pi / math.sqrt(2 * omega * n)
    out = tmp_path / "h.csv"
    run_ok(runner, ["heatmap", "--n", str(n), "--omega", str(omega), "--grid", "401",
                    "--tmin", "0", "--tmax", str(2 * period), "--tsteps", "9", "--out", str(out)])
    _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    assert columns == ["y", "t", "density"]
    data = np.array(rows_as_floats(columns, rows, "y", "t", "density"))
    slices = data.reshape(9, 401, 3)
    ys = slices[0, :, 0]
    for j in range(9):
        mass = np.trapezoid(slices[j, :, 2], ys)
        assert abs(mass - 1.0) < 1e-6
    # slices 0 and 4 are one full period apart
    assert np.max(np.abs(slices[0, :, 2] - slices[4, :, 2])) < 1e-9


def test_heatmap_ground_state_static(runner, tmp_path):
    out = tmp_path / "h0.csv"
    run_ok(runner, ["heatmap", "--n", "0", "--omega", "0.2", "--grid", "101",
                    "--tmin", "0", "--tmax", "5", "--tsteps", "4", "--out", str(out)])
    _, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    data = np.array(rows_as_floats(columns, rows, "density"))
    slices = data.reshape(4, 101)
    for j in range(1, 4):
        assert np.array_equal(slices[0], slices[j])


# ---------------------------------------------------------------- thermo


def test_thermo_schema_and_values(runner, tmp_path):
    out = tmp_path / "th.csv"
    result = run_ok(runner, ["thermo", "--k", "0.2", "--tmin", "1", "--tmax", "10",
                             "--tsteps", "5", "--out", str(out)])
    header, columns, rows = parse_csv(out.read_text(encoding="utf-8"))
    assert columns[:6] == ["k", "T", "beta", "Z_exact", "Z_em", "em_rel_err"]
    assert len(rows) == 5
    data = rows_as_floats(columns, rows, "T", "Z_exact", "C_V_em", "em_rel_err")
    assert all(z >= 1.0 for _, z, _, _ in data)
    assert all(cv > 0.0 for _, _, cv, _ in data)
    # T = 10, k = 0.2: the closed form is safely inside its window
    assert data[-1][3] < 0.01
    assert "warning" in combined_output(result)  # T = 1 is outside it


def test_thermo_no_warning_when_valid(runner, tmp_path):
    out = tmp_path / "th2.csv"
    result = run_ok(runner, ["thermo", "--k", "0.2", "--tmin", "8", "--tmax", "10",
                             "--tsteps", "3", "--out", str(out)])
    assert "warning" not in combined_output(result)


def test_thermo_truncation_budget_exit_code(runner, monkeypatch):
    monkeypatch.setattr(cli_mod, "thermo_sweep", _raise_budget)
    result = runner.invoke(main, ["thermo", "--tsteps", "2"])
    assert result.exit_code == EXIT_TRUNCATION_BUDGET


def _raise_budget(*args, **kwargs):
    from majorana_lab.thermo import TruncationBudget

    raise TruncationBudget("forced", partial_sum=1.0, truncation_n=10**8, tail_bound=1.0)


def test_thermo_json(runner, tmp_path):
    out = tmp_path / "th.json"
    run_ok(runner, ["thermo", "--k", "0.4", "--tmin", "5", "--tmax", "10", "--tsteps", "2",
                    "--format", "json", "--out", str(out)])
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["config"]["particles"] == 1
    assert len(payload["rows"]) == 2
    assert payload["rows"][0]["k"] == pytest.approx(0.4)


# ---------------------------------------------------------------- configuration


def test_env_config_merged_under_flags(runner, tmp_path):
    cfg = tmp_path / "lab.cfg"
    cfg.write_text("omega=0.4\ngrid=21\n# comment line\n\n", encoding="utf-8")
    env = {CONFIG_ENV_VAR: str(cfg)}

    out1 = tmp_path / "cfg1.csv"
    run_ok(runner, ["density", "--n", "0", "--out", str(out1)], env=env)
    header, _, rows = parse_csv(out1.read_text(encoding="utf-8"))
    assert float(header["omega"]) == pytest.approx(0.4, rel=1e-15)
    assert len(rows) == 21

    out2 = tmp_path / "cfg2.csv"
    run_ok(runner, ["density", "--n", "0", "--omega", "0.7", "--out", str(out2)], env=env)
    header, _, _ = parse_csv(out2.read_text(encoding="utf-8"))
    assert float(header["omega"]) == pytest.approx(0.7, rel=1e-15)  # flag wins


def test_env_config_missing_file_errors(runner, tmp_path):
    result = runner.invoke(main, ["density"], env={CONFIG_ENV_VAR: str(tmp_path / "nope.cfg")})
    assert result.exit_code != 0


def test_env_config_bad_line_errors(runner, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("omega 0.4\n", encoding="utf-8")
    result = runner.invoke(main, ["density"], env={CONFIG_ENV_VAR: str(cfg)})
    assert result.exit_code != 0


def test_stdout_emission(runner):
    result = run_ok(runner, ["density", "--n", "0", "--grid", "5"])
    assert result.output.startswith("# majorana-lab density")
    _, columns, rows = parse_csv(result.output)
    assert columns == ["y", "density"] and len(rows) == 5
