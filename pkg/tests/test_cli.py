import math
import os
import subprocess
import sys

import pytest

from mesoscope.configfile import dump_config, load_config, loads_config
from mesoscope.errors import InvalidConfig, ParseError


def run_cli(*args, threads=None):
    env = dict(os.environ)
    if threads is not None:
        env["MESOSCOPE_THREADS"] = str(threads)
    return subprocess.run([sys.executable, "-m", "mesoscope", *args],
                          capture_output=True, text=True, env=env)


# ---------------------------------------------------------------------------
# config loading

def test_defaults_without_file():
    cfg = load_config(None)
    assert cfg.geometry.lambda1 == 1e-6
    assert cfg.geometry.slit_separation_S == 2.29e-6
    assert cfg.environment.alpha == 5.0
    assert cfg.pattern_points == 1001


def test_empty_file_gives_defaults(tmp_path):
    p = tmp_path / "empty.cfg"
    p.write_text("# nothing here\n\n")
    assert load_config(p) == load_config(None)


def test_lambda1_override_rederives_geometry():
    cfg = loads_config("lambda1_cm = 2e-6\n")
    g = cfg.geometry
    assert g.lambda1 == 2e-6
    assert g.slit_separation_S == 2.29 * 2e-6
    assert g.slit_mirror_distance_L == 2.5 * 2e-6
    assert g.lambda2 == 2e-6 / 4.0
    assert g.probe_aperture_Wa == 4.0 * (2e-6 / 4.0)


def test_explicit_keys_pin_derived_values():
    cfg = loads_config("lambda1_cm = 2e-6\nslit_separation_cm = 1e-6\n")
    assert cfg.geometry.slit_separation_S == 1e-6


def test_sections_accepted_and_checked():
    cfg = loads_config("[mirror]\nmass_g = 2e-17\n")
    assert cfg.mirror.mass_M == 2e-17
    with pytest.raises(ParseError):
        loads_config("[geometry]\nmass_g = 2e-17\n")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        loads_config("lambda1_cm = 1e-6\nnot a line\n")
    assert e.value.line_no == 2
    with pytest.raises(ParseError):
        loads_config("unknown_key = 3\n")
    with pytest.raises(ParseError):
        loads_config("alpha = 5\nalpha = 6\n")
    with pytest.raises(ParseError):
        loads_config("[nonsense]\n")
    with pytest.raises(ParseError):
        loads_config("alpha = banana\n")


def test_invalid_values_rejected():
    with pytest.raises(InvalidConfig):
        loads_config("lambda1_cm = -1\n")


def test_dump_round_trip():
    for text in ("", "lambda1_cm = 3.7e-6\nalpha = 2.5\n",
                 "[quadrature]\nrel_tolerance = 1e-6\n"):
        cfg = loads_config(text)
        assert loads_config(dump_config(cfg)) == cfg


# ---------------------------------------------------------------------------
# commands

def test_cli_dump_config_exit_zero():
    r = run_cli("--dump-config")
    assert r.returncode == 0
    assert loads_config(r.stdout) == load_config(None)


def test_cli_no_command_exits_one():
    r = run_cli()
    assert r.returncode == 1


def test_cli_table1():
    r = run_cli("table1")
    assert r.returncode == 0
    for val in ("0.7741", "0.4995", "0.3651"):
        assert val in r.stdout
    assert "sign" in r.stdout


def test_cli_table1_bad_config(tmp_path):
    p = tmp_path / "bad.cfg"
    p.write_text("lambda1_cm = 0\n")
    r = run_cli("--config", str(p), "table1")
    assert r.returncode == 1
    assert "error" in r.stderr


def test_cli_missing_config_file():
    r = run_cli("--config", "/nonexistent/path.cfg", "table1")
    assert r.returncode == 1


def test_cli_pattern_delta(tmp_path):
    out = tmp_path / "pattern.csv"
    r = run_cli("pattern", "--density", "delta", "--points", "101",
                "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "D_over_lambda1,E_A,E_B,I"
    assert len(lines) == 102
    rows = [list(map(float, ln.split(","))) for ln in lines[1:]]
    I = [row[3] for row in rows]
    assert I[0] < 1e-6 * max(I)  # near-zero edge minima
    assert "node depth ratio" in r.stdout
    # intensity column recomputes from the stored fields
    for row in rows[::10]:
        assert math.isclose(row[3], 0.5 * (row[1] + row[2]) ** 2, rel_tol=1e-12,
                            abs_tol=1e-300)


def test_cli_pattern_default_points_row_count(tmp_path):
    out = tmp_path / "p.csv"
    r = run_cli("pattern", "--density", "truncated", "--out", str(out))
    assert r.returncode == 0
    assert len(out.read_text().splitlines()) == 1002


def test_cli_pattern_missing_directory():
    r = run_cli("pattern", "--density", "delta", "--points", "51",
                "--out", "/no/such/dir/out.csv")
    assert r.returncode == 1
    assert "error" in r.stderr


def test_cli_pattern_tabulated(tmp_path):
    src = tmp_path / "density.csv"
    src.write_text("z_cm,p_per_cm\n-5e-10,0\n0,2e9\n5e-10,0\n")
    r = run_cli("pattern", "--density", f"tabulated:{src}", "--points", "51")
    assert r.returncode == 0
    assert r.stdout.startswith("D_over_lambda1")


def test_cli_pattern_nonconvergent_quadrature_exits_two(tmp_path):
    p = tmp_path / "tight.cfg"
    p.write_text("[quadrature]\ninitial_intervals = 1024\nmax_intervals = 1024\n")
    r = run_cli("--config", str(p), "pattern", "--density", "gaussian",
                "--points", "11")
    assert r.returncode == 2


def test_cli_feasibility(tmp_path):
    out = tmp_path / "report.csv"
    r = run_cli("feasibility", "--out", str(out))
    assert r.returncode == 0
    assert "binding constraint" in r.stdout and "T_g" in r.stdout
    header, row = out.read_text().splitlines()
    assert header.split(",")[0] == "delta_v_i_cm_s"
    values = row.split(",")
    assert len(values) == 12
    assert math.isclose(float(values[0]), 3.994590218356652e-3, rel_tol=1e-12)


def test_cli_feasibility_alpha_zero_rejected(tmp_path):
    p = tmp_path / "bad.cfg"
    p.write_text("alpha = 0\n")
    r = run_cli("--config", str(p), "feasibility")
    assert r.returncode == 1


def test_cli_trap_collapsed(tmp_path):
    out = tmp_path / "trap.csv"
    r = run_cli("trap", "--mode", "collapsed", "--out", str(out))
    assert r.returncode == 0
    header, row = out.read_text().splitlines()
    cols = dict(zip(header.split(","), row.split(",")))
    assert math.isclose(float(cols["k_erg_cm2"]), 1.1e-6, rel_tol=0.05)
    assert math.isclose(float(cols["omega_os_rad_s"]), 3.2e5, rel_tol=0.05)
    assert math.isclose(float(cols["B0_G"]), 8.5e2, rel_tol=0.10)


def test_cli_sweep_alpha(tmp_path):
    out = tmp_path / "sweep.csv"
    r = run_cli("sweep", "--param", "alpha=1:10:linear:5", "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 6
    header = lines[0].split(",")
    i_alpha = header.index("alpha")
    i_rho = header.index("rho_alpha_mol_L")
    rows = [ln.split(",") for ln in lines[1:]]
    alphas = [float(rw[i_alpha]) for rw in rows]
    rhos = [float(rw[i_rho]) for rw in rows]
    assert alphas[0] == 1.0 and alphas[-1] == 10.0
    products = [a * r_ for a, r_ in zip(alphas, rhos)]
    assert all(math.isclose(p, products[0], rel_tol=1e-9) for p in products)


def test_cli_sweep_lambda1_radiation_monotone(tmp_path):
    out = tmp_path / "sweep.csv"
    r = run_cli("sweep", "--param", "lambda1=1e-7:1e-5:log:20", "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 21
    i_tr = lines[0].split(",").index("T_R_K")
    temps = [float(ln.split(",")[i_tr]) for ln in lines[1:]]
    assert all(a > b for a, b in zip(temps, temps[1:]))


def test_cli_sweep_two_steps_hits_endpoints(tmp_path):
    out = tmp_path / "two.csv"
    r = run_cli("sweep", "--param", "mass_M=1e-17:2e-17:linear:2", "--out", str(out))
    assert r.returncode == 0
    rows = out.read_text().splitlines()[1:]
    assert float(rows[0].split(",")[0]) == 1e-17
    assert float(rows[1].split(",")[0]) == 2e-17


def test_cli_sweep_bad_specs():
    assert run_cli("sweep", "--param", "alpha=5:1:linear:4").returncode == 1
    assert run_cli("sweep", "--param", "alpha=1:5:linear:1").returncode == 1
    assert run_cli("sweep", "--param", "emissivity=0:1:linear:3").returncode == 1
    assert run_cli("sweep", "--param", "alpha=0:5:log:3").returncode == 1
    assert run_cli("sweep", "--param", "garbage").returncode == 1


def test_cli_sweep_thread_count_does_not_change_bytes(tmp_path):
    outs = []
    for threads in (1, 4):
        out = tmp_path / f"sweep_{threads}.csv"
        r = run_cli("sweep", "--param", "lambda1=1e-7:1e-5:log:12",
                    "--out", str(out), threads=threads)
        assert r.returncode == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_cli_compare(tmp_path):
    out = tmp_path / "cmp.csv"
    r = run_cli("compare", "--density-a", "truncated", "--density-b", "gaussian",
                "--points", "101", "--out", str(out))
    assert r.returncode == 0
    assert "sharper: first" in r.stdout
    lines = out.read_text().splitlines()
    assert lines[0] == "D_over_lambda1,I_a,I_b"
    assert len(lines) == 102


def test_cli_compare_bifurcated_runs():
    r = run_cli("compare", "--density-a", "bifurcated", "--density-b", "delta",
                "--points", "51")
    assert r.returncode == 0
    assert "sharper:" in r.stdout
