"""Exit criteria. Each test records one PASS/FAIL line shown in the terminal summary."""

import csv
import io
import math
import time

import numpy as np
import pytest

from timequbit import qla
from timequbit.bell import bell_state, chsh, tsirelson_settings
from timequbit.cli import main
from timequbit.dirac import DiracParams, dirac_hamiltonian, effective_field, energy, gamma_matrices
from timequbit.dynamics import ControlledHamiltonian, ZeemanParams, evolve_composite, kraus_pair
from timequbit.mz import MzConfig, fringe_visibility, run_interferometer, which_path_dephase
from timequbit.qubit import bloch_vector, density_from_bloch, rodrigues

from conftest import ACCEPTANCE_RESULTS, random_density, random_hermitian, random_ket, random_unit

TSIRELSON = 2 * math.sqrt(2)
R2 = 1 / math.sqrt(2)


def record(number, title, ok, detail):
    ACCEPTANCE_RESULTS.append((number, title, bool(ok), detail))
    assert ok, f"criterion {number} ({title}) failed: {detail}"


def cli_rows(argv):
    out = io.StringIO()
    status = main(argv, stdout=out)
    assert status == 0, f"{argv} exited with {status}"
    return list(csv.DictReader(io.StringIO(out.getvalue())))


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def test_01_chsh_tsirelson():
    (row,) = cli_rows(["chsh"])
    err = abs(float(row["s"]) - TSIRELSON)
    rho = np.outer(bell_state(), bell_state().conj())
    settings = tsirelson_settings()
    lib_err = abs(chsh(rho, *settings).s - TSIRELSON)
    timings = []
    for _ in range(50):
        t0 = time.perf_counter()
        chsh(rho, *settings)
        timings.append(time.perf_counter() - t0)
    runtime = min(timings)
    record(
        1,
        "CHSH Tsirelson saturation",
        err <= 1e-12 and lib_err <= 1e-12 and runtime < 1e-3,
        f"|S - 2sqrt2| = {max(err, lib_err):.2e} (tol 1e-12), runtime {runtime * 1e3:.3f} ms (< 1 ms)",
    )


def test_02_classical_bound():
    rows = cli_rows(["lhv-table"])
    max_abs = max(abs(int(r["s"])) for r in rows)
    record(2, "LHV classical bound", len(rows) == 16 and max_abs == 2, f"{len(rows)} strategies, max |S| = {max_abs}")


def test_03_time_parity_fringes():
    base = ["mz-fringes", "--omega", "1.0", "--t-max", repr(4 * math.pi), "--steps", "64", "--axis", "0,0,1", "--spin-in", "1,0,0"]
    rows = cli_rows(base + ["--lambda", "0"])
    phase = np.array([float(r["phase"]) for r in rows])
    p1 = np.array([float(r["p_d1"]) for r in rows])
    err = float(np.max(np.abs(p1 - np.cos(phase / 2) ** 2)))
    grid_ok = len(rows) == 64 and phase[0] == 0.0 and abs(phase[-1] - 4 * math.pi) < 1e-12
    half = cli_rows(base + ["--lambda", "0.5"])
    vis = fringe_visibility([float(r["phase"]) for r in half], [float(r["p_d1"]) for r in half])
    record(
        3,
        "time-parity fringes",
        grid_ok and err <= 1e-12 and abs(vis - 0.5) <= 1e-10,
        f"max |p_d1 - cos^2| = {err:.2e} (tol 1e-12); visibility(lambda=0.5) = {vis:.12f} (tol 1e-10)",
    )


def test_04_kraus_completeness(rng):
    worst = 0.0
    for _ in range(1000):
        ch = ControlledHamiltonian(random_hermitian(rng, 2), random_hermitian(rng, 2))
        even, odd = kraus_pair(ch, rng.uniform(0, 10))
        worst = max(worst, np.max(np.abs(even.conj().T @ even + odd.conj().T @ odd - np.eye(2))))
    record(4, "Kraus completeness", worst <= 1e-11, f"max deviation {worst:.2e} over 1000 draws (tol 1e-11)")


def test_05_oracle_equivalence(rng):
    d1, d2 = np.array([R2, R2]), np.array([R2, -R2])
    worst = 0.0
    for _ in range(200):
        cfg = MzConfig(ZeemanParams(rng.uniform(-5, 5), tuple(random_unit(rng))), rng.uniform(0, 10), random_ket(rng, 2))
        res = run_interferometer(cfg)
        out = evolve_composite(np.kron(d1, cfg.spin_in), cfg.zeeman.hamiltonian(), cfg.traversal_time).reshape(2, 2)
        full = [np.linalg.norm(d @ out) ** 2 for d in (d1, d2)]
        worst = max(worst, abs(res.p_d1 - full[0]), abs(res.p_d2 - full[1]))
    record(5, "Kraus vs full 4x4 interferometer", worst <= 1e-10, f"max port deviation {worst:.2e} over 200 configs (tol 1e-10)")


def test_06_dirac_dispersion(rng):
    sq_err = eig_err = 0.0
    for _ in range(1000):
        params = DiracParams(rng.uniform(0, 5), tuple(rng.normal(scale=3, size=3)))
        h = dirac_hamiltonian(params)
        e2 = params.mass**2 + sum(c * c for c in params.momentum)
        sq_err = max(sq_err, np.max(np.abs(h @ h - e2 * np.eye(4))))
        vals, _ = qla.herm_eig(h)
        e = energy(params)
        eig_err = max(eig_err, np.max(np.abs(vals - [-e, -e, e, e])))
    record(
        6,
        "Dirac dispersion",
        sq_err <= 1e-11 and eig_err <= 1e-10,
        f"max |H^2 - E^2 I| = {sq_err:.2e} (tol 1e-11), max eigenvalue error {eig_err:.2e} (tol 1e-10)",
    )


def test_07_gamma_algebra():
    g = gamma_matrices()
    eta = np.diag([1, -1, -1, -1])
    worst, pairs = 0.0, 0
    for mu in range(4):
        for nu in range(mu, 4):
            worst = max(worst, np.max(np.abs(qla.anticommutator(g[mu], g[nu]) - 2 * eta[mu, nu] * np.eye(4))))
            pairs += 1
    record(7, "gamma anticommutators", pairs == 10 and worst <= 1e-12, f"{pairs} pairs, max deviation {worst:.2e} (tol 1e-12)")


def test_08_zitterbewegung(rng):
    norm_err = proj_err = rms_worst = 0.0
    for _ in range(20):
        m, p, s = float(rng.uniform(0, 3)), [float(c) for c in rng.normal(size=3)], int(rng.choice([-1, 1]))
        r0 = np.array([float(c) for c in random_unit(rng) * rng.uniform(0.3, 1.0)])
        params = DiracParams(m, tuple(p))
        e = energy(params)
        periods = 3
        t_max = periods * math.pi / e
        steps = 64 * periods + 1
        rows = cli_rows([
            "dirac-precess", "--m", repr(m), "--p=" + ",".join(map(repr, p)), "--helicity", str(s),
            "--initial=" + ",".join(repr(float(c)) for c in r0), "--t-max", repr(t_max), "--steps", str(steps),
        ])
        t = np.array([float(r["t"]) for r in rows])
        traj = np.array([[float(r[k]) for k in ("r_x", "r_y", "r_z")] for r in rows])
        b = effective_field(params, s).vector
        bhat = b / np.linalg.norm(b)
        norm_err = max(norm_err, np.max(np.abs(np.linalg.norm(traj, axis=1) - np.linalg.norm(r0))))
        proj_err = max(proj_err, np.max(np.abs(traj @ bhat - r0 @ bhat)))
        oracle = np.array([rodrigues(r0, bhat, 2 * e * ti) for ti in t])
        rms_worst = max(rms_worst, math.sqrt(np.mean((traj - oracle) ** 2)))
    record(
        8,
        "zitterbewegung precession at 2E",
        norm_err <= 1e-10 and proj_err <= 1e-10 and rms_worst <= 1e-8,
        f"|r| drift {norm_err:.2e}, r.B drift {proj_err:.2e} (tol 1e-10), RMS vs closed form {rms_worst:.2e} (tol 1e-8)",
    )


def test_09_finite_shot_convergence():
    t0 = time.perf_counter()
    rows = cli_rows(["chsh-sample", "--shots", "1000000", "--seed", "42"])
    runtime = time.perf_counter() - t0
    s_hat = float(rows[-1]["e_hat"])
    again = float(cli_rows(["chsh-sample", "--shots", "1000000", "--seed", "42"])[-1]["e_hat"])
    record(
        9,
        "finite-shot CHSH",
        rows[-1]["setting_pair"] == "s_hat" and abs(s_hat - TSIRELSON) < 0.01 and again == s_hat and runtime < 5,
        f"S_hat = {s_hat:.6f}, |S_hat - 2sqrt2| = {abs(s_hat - TSIRELSON):.2e} (< 0.01), runtime {runtime:.2f} s (< 5 s)",
    )


def test_10_bloch_round_trip_and_channel(rng):
    rt_err = 0.0
    for _ in range(1000):
        r = random_unit(rng) * rng.uniform(0, 1) ** (1 / 3)
        rt_err = max(rt_err, np.max(np.abs(np.array(bloch_vector(density_from_bloch(r))) - r)))
    tr_err = herm_err = 0.0
    min_eig = 1.0
    for lam in np.linspace(0, 1, 21):
        for _ in range(50):
            out = which_path_dephase(random_density(rng, 2, rank=int(rng.integers(1, 3))), lam)
            tr_err = max(tr_err, abs(np.trace(out) - 1))
            herm_err = max(herm_err, np.max(np.abs(out - out.conj().T)))
            min_eig = min(min_eig, np.linalg.eigvalsh(out).min())
    record(
        10,
        "Bloch round trip and dephasing channel",
        rt_err <= 1e-12 and tr_err <= 1e-12 and herm_err <= 1e-12 and min_eig >= -1e-12,
        f"round trip {rt_err:.2e} (tol 1e-12); trace err {tr_err:.2e}, Hermiticity err {herm_err:.2e}, min eigenvalue {min_eig:.2e}",
    )
