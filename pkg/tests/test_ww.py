import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wwdipole import (
    DipoleConfig,
    UnitSystem,
    exact_average_power,
    formation_time,
    photon_spectral_density,
    ww_angular,
    ww_photon_rate,
    ww_power,
)
from wwdipole.radiometry import sphere_integral
from wwdipole.units import ELEMENTARY_CHARGE_CGS
from wwdipole.ww import normalization_mode, ww_estimate


def test_spectral_density_is_alpha():
    assert photon_spectral_density(UnitSystem.dimensionless()) == 7.2973525693e-3
    assert photon_spectral_density(UnitSystem.dimensionless(0.01)) == 0.01
    g = UnitSystem.gaussian()
    assert photon_spectral_density(g) == pytest.approx(ELEMENTARY_CHARGE_CGS ** 2 / (g.hbar * g.c), rel=1e-12)


@pytest.mark.parametrize("omega, expected", [(1.0, 2 * math.pi), (2 * math.pi, 1.0), (3.0, 2 * math.pi / 3)])
def test_formation_time(omega, expected):
    assert formation_time(DipoleConfig(1, 0.01, omega)) == pytest.approx(expected, rel=1e-15)


def test_photon_rate_value(units, cfg):
    with mpmath.workdps(30):
        oracle = mpmath.mpf("7.2973525693e-3") * mpmath.mpf("0.01") ** 2 / (2 * mpmath.pi)
    assert ww_photon_rate(cfg, units) == pytest.approx(float(oracle), rel=1e-14)
    assert ww_photon_rate(cfg, units) == pytest.approx(1.16141e-7, abs=1e-12)


def test_photon_rate_limits(units):
    assert ww_photon_rate(DipoleConfig(1, 0.0, 1.0), units) == 0.0
    r1 = ww_photon_rate(DipoleConfig(1, 0.01, 1.3), units)
    r2 = ww_photon_rate(DipoleConfig(1, 0.02, 1.3), units)
    assert r2 / r1 == pytest.approx(4.0, rel=1e-15)


def test_power_value(units, cfg):
    assert ww_power(cfg, units) == pytest.approx(1e-4 / (2 * math.pi), rel=1e-15)
    assert ww_power(DipoleConfig(1, 0.0, 1.0), units) == 0.0


def test_angular_values(units, cfg):
    assert ww_angular(math.pi / 2, cfg, units, "paper-literal") == pytest.approx(3e-4 / (8 * math.pi ** 2), rel=1e-15)
    assert ww_angular(math.pi / 2, cfg, units, "literal") == pytest.approx(3.7995443865876665e-06, rel=1e-15)
    for mode in ("paper-literal", "self-consistent"):
        assert ww_angular(0.0, cfg, units, mode) == 0.0


def test_angular_integrals(units, cfg):
    p = ww_power(cfg, units)
    selfcons = sphere_integral(lambda th: ww_angular(th, cfg, units, "self-consistent"), 16)
    literal = sphere_integral(lambda th: ww_angular(th, cfg, units, "paper-literal"), 16)
    assert selfcons == pytest.approx(p, rel=1e-12)
    assert literal == pytest.approx(2 * p, rel=1e-12)


def test_unknown_normalization(units, cfg):
    with pytest.raises(ValueError):
        ww_angular(1.0, cfg, units, "peak")
    assert normalization_mode("literal") == "paper-literal"


def test_estimate_bundle(units, cfg):
    est = ww_estimate(cfg, units)
    assert est.photon_spectral_density == units.alpha
    assert est.power == pytest.approx(units.hbar * cfg.omega * est.photon_rate, rel=1e-14)
    assert est.beta == pytest.approx(0.01)


random_configs = st.builds(
    DipoleConfig, q=st.floats(0.01, 100), z0=st.floats(1e-6, 0.5), omega=st.floats(1e-3, 1e3)
)


@settings(max_examples=100, deadline=None)
@given(cfg=random_configs, alpha=st.floats(1e-4, 1.0))
def test_chain_identity(cfg, alpha):
    units = UnitSystem.dimensionless(alpha)
    assert ww_power(cfg, units) == pytest.approx(units.hbar * cfg.omega * ww_photon_rate(cfg, units), rel=1e-14)


@settings(max_examples=50, deadline=None)
@given(q=st.floats(1e-12, 1e-8), z0=st.floats(1e-10, 1.0), omega=st.floats(1.0, 1e9))
def test_chain_identity_gaussian(q, z0, omega):
    units = UnitSystem.gaussian()
    cfg = DipoleConfig(q, z0, omega)
    assert ww_power(cfg, units) == pytest.approx(units.hbar * omega * ww_photon_rate(cfg, units), rel=1e-14)


@settings(max_examples=100, deadline=None)
@given(cfg=random_configs, c=st.floats(0.5, 1e3))
def test_ratio_invariant(cfg, c):
    units = UnitSystem(c=c, hbar=1.0, alpha=1.0 / c, charge_unit=1.0, mode="dimensionless")
    assert ww_power(cfg, units) / exact_average_power(cfg, units) == pytest.approx(3 / (2 * math.pi), rel=1e-14)


@settings(max_examples=50, deadline=None)
@given(cfg=random_configs)
def test_beta_squared_suppression(cfg):
    units = UnitSystem.dimensionless()
    half = DipoleConfig(cfg.q, cfg.z0 / 2, cfg.omega)
    assert ww_power(cfg, units) / ww_power(half, units) == pytest.approx(4.0, rel=1e-15)
