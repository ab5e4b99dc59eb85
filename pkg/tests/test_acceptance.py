"""Exit criteria for the package, each at its stated tolerance."""
import json
import math
import time

import numpy as np
import pytest

from wwdipole import (
    DipoleConfig,
    ObservationPoint,
    UnitSystem,
    average_larmor_power,
    average_reaction_power,
    exact_angular,
    exact_average_power,
    harmonic_spectrum,
    total_power_numeric,
    ww_angular,
    ww_photon_rate,
    ww_power,
)
from wwdipole.cli import main
from wwdipole.radiometry import sphere_integral, total_power_with_pattern
from wwdipole.retarded import solve_retarded_times

RATIO = 3 / (2 * math.pi)


def rel(a, b):
    return abs(a - b) / abs(b)


def cli_json(capsys, *argv):
    assert main(list(argv)) == 0
    return json.loads(capsys.readouterr().out)


def test_01_ratio_claim(capsys, criterion):
    rng = np.random.default_rng(2003)
    worst = 0.0
    for _ in range(5):
        beta, omega, q = rng.uniform(0.001, 0.09), rng.uniform(0.1, 10), rng.uniform(0.1, 5)
        report = cli_json(capsys, "compare", "--beta", repr(beta), "--omega", repr(omega),
                          "--charge", repr(q), "--format", "json", "--ntime", "16", "--ntheta", "8")
        worst = max(worst, rel(report["ratio_ww_exact"], RATIO))
    criterion(1, worst <= 1e-12, f"max rel error of ratio_ww_exact vs 3/(2 pi) = {worst:.2e} (tol 1e-12)")


def test_02_exact_power_reproduction(units, cfg, criterion):
    start = time.process_time()
    p = total_power_numeric(cfg, units, radius_lambdas=200, n_theta=32, n_time=64)
    elapsed = time.process_time() - start
    err = rel(p, cfg.p0 ** 2 * cfg.omega ** 4 / (3 * units.c ** 3))
    criterion(2, err <= 1e-3 and elapsed <= 10,
              f"P_numeric = {p:.8e}, rel error {err:.2e} (tol 1e-3), {elapsed:.3f} s CPU (limit 10 s)")


def test_03_angular_shape(units, cfg, criterion):
    _, dist = total_power_with_pattern(cfg, units, 200, 32, 64)
    amplitude, residual = dist.fit_sin2()
    err = rel(amplitude, 3 / (8 * math.pi) * exact_average_power(cfg, units))
    criterion(3, residual <= 1e-2 and err <= 1e-2,
              f"max residual {residual:.2e} of peak (tol 1e-2), fitted A rel error {err:.2e} (tol 1e-2)")


def test_04_paper_literal_coefficients(capsys, criterion):
    data = cli_json(capsys, "pattern", "--z0", "0.01", "--omega", "1", "--dimensionless",
                    "--normalization", "literal", "--ntheta", "8", "--format", "json")
    i = 4
    assert data["theta_rad"][i] == pytest.approx(math.pi / 2, rel=1e-15)
    p0, w, c = 0.01, 1.0, 1.0
    e6 = rel(data["ww_literal"][i], 3 * p0 ** 2 * w ** 4 / (8 * math.pi ** 2 * c ** 3))
    e7 = rel(data["exact_literal"][i], p0 ** 2 * w ** 4 / (4 * math.pi * c ** 3))
    criterion(4, e6 <= 1e-12 and e7 <= 1e-12, f"WW literal rel error {e6:.1e}, exact literal {e7:.1e} (tol 1e-12)")


def test_05_normalization_ledger(criterion):
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(5):
        units = UnitSystem.dimensionless()
        cfg = DipoleConfig(rng.uniform(0.5, 2), rng.uniform(0.001, 0.1), rng.uniform(0.5, 2))
        ww_int = sphere_integral(lambda th: ww_angular(th, cfg, units, "paper-literal"), 16)
        ex_int = sphere_integral(lambda th: exact_angular(th, cfg, units, "paper-literal"), 16)
        worst = max(worst, rel(ww_int, 2 * ww_power(cfg, units)), rel(ex_int, 2 * exact_average_power(cfg, units)))
    criterion(5, worst <= 1e-10, f"literal integrals vs 2x totals, max rel error {worst:.1e} (tol 1e-10)")


def test_06_photon_rate_chain(units, cfg, criterion):
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(200):
        c = DipoleConfig(rng.uniform(0.1, 10), rng.uniform(1e-4, 0.5), rng.uniform(0.1, 10))
        worst = max(worst, rel(ww_power(c, units), units.hbar * c.omega * ww_photon_rate(c, units)))
    rate = ww_photon_rate(cfg, units)
    off = abs(rate - 1.16139e-7)
    criterion(6, worst <= 1e-14 and off <= 1e-12,
              f"chain max rel error {worst:.1e} (tol 1e-14); rate = {rate:.9e}, |rate - 1.16139e-7| = {off:.2e} (tol 1e-12)")


def test_07_radiation_reaction_balance(units, criterion):
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(10):
        cfg = DipoleConfig(rng.uniform(0.1, 10), rng.uniform(1e-3, 0.5), rng.uniform(0.1, 10))
        p = exact_average_power(cfg, units)
        for n in (None, 10_000):
            react, larmor = average_reaction_power(cfg, units, n), average_larmor_power(cfg, units, n)
            worst = max(worst, rel(react, -p), rel(-larmor, -p))
    criterion(7, worst <= 1e-12, f"<F.v> and -<P_Larmor> vs -P_exact, max rel error {worst:.1e} (tol 1e-12)")


def test_08_scaling_laws(units, criterion):
    full, half = DipoleConfig(1.0, 0.02, 1.0), DipoleConfig(1.0, 0.01, 1.0)
    ww_ratio = ww_power(full, units) / ww_power(half, units)
    ex_ratio = exact_average_power(full, units) / exact_average_power(half, units)
    num_ratio = total_power_numeric(full, units) / total_power_numeric(half, units)
    ok = rel(ww_ratio, 4) <= 1e-14 and rel(ex_ratio, 4) <= 1e-14 and rel(num_ratio, 4) <= 5e-3
    criterion(8, ok, f"WW {ww_ratio:.15g}, exact {ex_ratio:.15g}, numeric {num_ratio:.6f} (tol 0.5%)")


def test_09_line_spectrum(units, criterion):
    def spectrum(beta):
        cfg = DipoleConfig(1.0, beta, 1.0)
        obs = ObservationPoint(200 * cfg.wavelength(units), math.pi / 2)
        return harmonic_spectrum(cfg, units, obs, 256)

    fundamental = spectrum(0.01).fraction(1)
    thirds = [spectrum(b).fraction(3) for b in (0.1, 0.05, 0.025)]
    decreasing = all(a > b for a, b in zip(thirds, thirds[1:]))
    criterion(9, fundamental >= 0.999 and decreasing,
              f"fundamental fraction {fundamental:.12f} (>= 0.999); third-harmonic fractions {['%.3e' % x for x in thirds]}")


def test_10_solver_robustness(units, criterion):
    rng = np.random.default_rng(10)
    failures, worst = 0, 0.0
    for _ in range(10_000):
        omega = rng.uniform(0.1, 10)
        cfg = DipoleConfig(1.0, rng.uniform(1e-3, 0.5) / omega, omega)
        obs = ObservationPoint(cfg.z0 * math.exp(rng.uniform(math.log(2), math.log(1e4))),
                               math.acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * math.pi))
        try:
            _, _, resid = solve_retarded_times(obs, [rng.uniform(-100, 100)], cfg, units)
        except Exception:
            failures += 1
            continue
        worst = max(worst, float(resid[0]) / obs.r)
    criterion(10, failures == 0 and worst <= 1e-12,
              f"{failures} failures in 10^4 solves; max residual {worst:.1e} r (tol 1e-12 r)")
