"""Smoke tests for the python module: the headline numbers and a few shapes."""

import math
import os
import subprocess

import pytest

import hypcat


def test_headline_constants():
    assert hypcat.a_c() == pytest.approx(0.49577, abs=1e-4)
    assert hypcat.critical_pitch() == pytest.approx(2.17968, abs=1e-4)
    assert hypcat.K_const() == pytest.approx(0.40093, abs=1e-5)
    assert hypcat.a_l() == pytest.approx(1.10055, abs=1e-4)
    assert hypcat.A3() == pytest.approx(0.530638, abs=1e-6)
    assert hypcat.A4() == pytest.approx(0.715548, abs=1e-6)


def test_profile_values():
    assert hypcat.rho(1.2, 2.4) == pytest.approx(0.330439, abs=1e-5)
    assert hypcat.varrho(0.4) == pytest.approx(0.49268, abs=1e-5)
    assert hypcat.varrho(hypcat.a_c()) == pytest.approx(0.501143, abs=1e-5)
    # chart identity at a sample point
    a, s = 0.7, 1.3
    assert hypcat.x_of(a, s) == pytest.approx(hypcat.rho(a, hypcat.y_of(a, s)), abs=1e-9)


def test_classification():
    unstable = hypcat.classify_catenoid(0.3)
    assert unstable["kind"] == "unstable_index_one"
    assert "z" in unstable
    stable = hypcat.classify_catenoid(1.2)
    assert stable["kind"] == "globally_stable"
    assert stable["least_area"]

    hel = hypcat.classify_helicoid(3.0)
    assert hel["kind"] == "unstable_infinite_index"
    assert hel["conjugate"]["kind"] == "spherical"
    assert hel["conjugate"]["a"] == pytest.approx(math.atanh(1 / 3.0), abs=1e-12)

    with pytest.raises(ValueError):
        hypcat.classify_catenoid(-1.0)


def test_jacobi_and_intersections():
    assert hypcat.xi(0.3, 0.0) == pytest.approx(1.0, abs=1e-8)
    assert hypcat.find_z(0.3) == pytest.approx(0.5184563, abs=1e-5)
    assert hypcat.intersect_catenaries(0.1, 3.0) is None
    x, y = hypcat.intersect_catenaries(0.1, 0.2)
    assert y == pytest.approx(0.2805344, abs=1e-5)


def test_areas():
    cmp = hypcat.compare_areas(1.2, 2.4)
    assert cmp["band_area"] == pytest.approx(54.6636, abs=1e-3)
    assert cmp["disks_area"] == pytest.approx(57.2643, abs=1e-3)
    assert cmp["band_smaller"]


def test_meshes_and_curvature():
    mesh = hypcat.catenoid_mesh(0.8, s_max=2.0, n_s=9, n_theta=8)
    assert len(mesh["vertices"]) == 9 * 8
    assert all(u * u + v * v + w * w < 1.0 for u, v, w in mesh["vertices"])
    assert max(max(f) for f in mesh["faces"]) < len(mesh["vertices"])

    assert abs(hypcat.mean_curvature("catenoid", 0.8, 0.7, 1.1)) < 1e-4
    assert abs(hypcat.mean_curvature("helicoid", 2.0, 0.5, -0.4)) < 1e-4


def test_model_conversions():
    u, v, w = hypcat.hyperboloid_to_ball(math.cosh(2.0), math.sinh(2.0), 0.0, 0.0)
    assert w == pytest.approx(math.tanh(1.0), abs=1e-12)
    zx, zy, t = hypcat.ball_to_upperhalf(0.0, 0.0, 0.0)
    assert (zx, zy, t) == (0.0, 0.0, 1.0)


def test_quadrature_callback():
    assert hypcat.integrate(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-10)


def test_lemma_verdicts():
    verdicts = hypcat.verify_lemmas(grid=100)
    by_name = {v["name"]: v for v in verdicts}
    assert all(v["holds"] for v in verdicts)
    assert len(by_name) == 5


def test_cli_determinism():
    cli = os.environ.get("HYPCAT_CLI")
    if not cli:
        pytest.skip("HYPCAT_CLI not set")
    runs = [
        subprocess.run([cli, "constants", "--json"], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert b'"paper_ref"' in runs[0]
    out = subprocess.run([cli, "classify-helicoid", "--pitch", "2.3"],
                         capture_output=True, check=True).stdout.decode()
    assert "unstable_infinite_index" in out
    assert "paper_ref" in out


def test_cli_exit_codes():
    cli = os.environ.get("HYPCAT_CLI")
    if not cli:
        pytest.skip("HYPCAT_CLI not set")
    bad_domain = subprocess.run([cli, "classify-catenoid", "--a", "-1"], capture_output=True)
    assert bad_domain.returncode == 2
    bad_flag = subprocess.run([cli, "area", "--bogus", "1"], capture_output=True)
    assert bad_flag.returncode == 2


def _csv_rows(text):
    lines = [ln for ln in text.strip().splitlines() if "," in ln]
    return [[float(tok) for tok in ln.split(",")] for ln in lines[1:]]


def test_cli_lemmas_verify_and_budget():
    cli = os.environ.get("HYPCAT_CLI")
    if not cli:
        pytest.skip("HYPCAT_CLI not set")
    import json
    out = subprocess.run([cli, "lemmas-verify", "--grid", "100"],
                         capture_output=True, check=True).stdout.decode()
    verdicts = json.loads(out)["verdicts"]
    assert len(verdicts) == 5
    assert all(v["holds"] for v in verdicts)

    # a starved quadrature budget turns into a computation failure (exit 1)
    env = dict(os.environ, HYPCAT_MAX_EVALS="100")
    starved = subprocess.run(
        [cli, "rho-curve", "--a-min", "0.001", "--a-max", "0.002", "--samples", "2",
         "--derivative", "2"],
        capture_output=True, env=env)
    assert starved.returncode == 1


def test_cli_curve_shapes():
    cli = os.environ.get("HYPCAT_CLI")
    if not cli:
        pytest.skip("HYPCAT_CLI not set")
    # varrho over [0.05, 3]: a single interior maximum
    out = subprocess.run(
        [cli, "rho-curve", "--a-min", "0.05", "--a-max", "3", "--samples", "512"],
        capture_output=True, check=True).stdout.decode()
    values = [row[1] for row in _csv_rows(out)]
    rises = [values[i + 1] > values[i] for i in range(len(values) - 1)]
    direction_changes = sum(rises[i] != rises[i + 1] for i in range(len(rises) - 1))
    assert direction_changes == 1
    assert rises[0] and not rises[-1]

    # varrho' has a single zero, close to 0.5
    out = subprocess.run(
        [cli, "rho-curve", "--a-min", "0.05", "--a-max", "3", "--samples", "256",
         "--derivative", "1"],
        capture_output=True, check=True).stdout.decode()
    rows = _csv_rows(out)
    crossings = [
        rows[i][0] for i in range(len(rows) - 1) if (rows[i][1] > 0) != (rows[i + 1][1] > 0)
    ]
    assert len(crossings) == 1
    assert abs(crossings[0] - 0.496) < 0.02
