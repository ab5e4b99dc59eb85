"""Observables built from the simulated fields.

Intensities are period averages at a fixed observer: ``n_time`` uniform
samples over one period with the periodic trapezoid rule, which is
spectrally accurate for smooth periodic integrands.  Full-period averages
of received and emitted power coincide, so no retarded-time Jacobian
appears.  Total power integrates over cos(theta) with Gauss-Legendre
nodes; the azimuth contributes a factor 2 pi by symmetry of the axial
motion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fields import FieldSample, evaluate_grid, field_series
from .retarded import ObservationPoint
from .units import DipoleConfig, UnitSystem, require_subluminal

DEFAULT_RADIUS_LAMBDAS = 200.0
DEFAULT_N_THETA = 32
DEFAULT_N_TIME = 64

PROVENANCES = ("ww", "exact", "numeric")


@dataclass(frozen=True)
class AngularDistribution:
    thetas: np.ndarray
    dP_dOmega: np.ndarray
    provenance: str
    beta: float
    radius_lambdas: float | None = None

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        th = np.asarray(self.thetas)
        if th.ndim != 1 or th.size != np.size(self.dP_dOmega):
            raise ValueError("thetas and dP_dOmega must be 1-d arrays of equal length")
        if np.any(np.diff(th) <= 0) or th[0] < 0 or th[-1] > math.pi:
            raise ValueError("theta grid must be strictly increasing within [0, pi]")
        if np.any(np.asarray(self.dP_dOmega) < 0):
            raise ValueError("dP/dOmega must be non-negative")

    def fit_sin2(self) -> tuple[float, float]:
        """Least-squares amplitude A of ``A sin^2 theta`` and max residual / peak."""
        basis = np.sin(self.thetas) ** 2
        values = np.asarray(self.dP_dOmega)
        amplitude = float(basis @ values / (basis @ basis))
        residual = float(np.max(np.abs(values - amplitude * basis)) / np.max(values))
        return amplitude, residual


@dataclass(frozen=True)
class HarmonicSpectrum:
    """Power per solid angle carried by each harmonic ``n * omega``, n >= 1."""

    harmonics: list[tuple[int, float]]
    total: float
    dc: float = 0.0

    def power(self, n: int) -> float:
        return dict(self.harmonics).get(n, 0.0)

    def fraction(self, n: int) -> float:
        return self.power(n) / self.total if self.total > 0 else 0.0


def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]."""
    if n < 1:
        raise ValueError("quadrature order must be positive")
    return np.polynomial.legendre.leggauss(n)


def sphere_integral(func_of_theta, n_theta: int) -> float:
    """Integrate an axially symmetric function over the unit sphere."""
    x, w = gauss_legendre(n_theta)
    return 2.0 * math.pi * float(np.sum(w * np.asarray(func_of_theta(np.arccos(x)), dtype=float)))


def poynting(sample: FieldSample, units: UnitSystem) -> np.ndarray:
    """Energy flux ``(c / 4 pi) E x B``."""
    return units.c / (4.0 * math.pi) * np.cross(sample.E, sample.B)


def _check_numeric(radius_lambdas, n_time):
    if not radius_lambdas >= 10:
        raise ValueError(f"radius_lambdas must be >= 10, got {radius_lambdas!r}")
    if int(n_time) != n_time or n_time < 16:
        raise ValueError(f"n_time must be an integer >= 16, got {n_time!r}")


def _period_flux(thetas, config, units, radius_lambdas, n_time):
    """<r^2 S . r_hat> over one period for each polar angle (azimuth 0)."""
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    r = radius_lambdas * config.wavelength(units)
    t = np.arange(n_time) * (config.period / n_time)
    r_hat = np.stack([np.sin(thetas), np.zeros_like(thetas), np.cos(thetas)], axis=-1)
    xyz = np.repeat(r * r_hat, n_time, axis=0)
    e_vel, e_rad, nhat, _ = evaluate_grid(xyz, np.tile(t, thetas.size), config, units)
    E = e_vel + e_rad
    S = units.c / (4.0 * math.pi) * np.cross(E, np.cross(nhat, E))
    flux = np.einsum("ij,ij->i", S, np.repeat(r_hat, n_time, axis=0)).reshape(thetas.size, n_time)
    return r * r * flux.mean(axis=1)


def angular_power(theta: float, config: DipoleConfig, units: UnitSystem,
                  radius_lambdas: float = DEFAULT_RADIUS_LAMBDAS, n_time: int = DEFAULT_N_TIME) -> float:
    """Simulated period-averaged power per steradian at polar angle ``theta``."""
    _check_numeric(radius_lambdas, n_time)
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    require_subluminal(config, units)
    return float(_period_flux([theta], config, units, radius_lambdas, int(n_time))[0])


def numeric_distribution(thetas, config: DipoleConfig, units: UnitSystem,
                         radius_lambdas: float = DEFAULT_RADIUS_LAMBDAS,
                         n_time: int = DEFAULT_N_TIME) -> AngularDistribution:
    _check_numeric(radius_lambdas, n_time)
    beta = require_subluminal(config, units)
    thetas = np.asarray(thetas, dtype=float)
    values = _period_flux(thetas, config, units, radius_lambdas, int(n_time))
    # the on-axis null can come out as -0.0 or a rounding-level negative
    values = np.maximum(values, 0.0)
    return AngularDistribution(thetas, values, "numeric", beta, radius_lambdas)


def gauss_legendre_thetas(n_theta: int) -> tuple[np.ndarray, np.ndarray]:
    """Polar angles (ascending) and matching weights in cos(theta)."""
    x, w = gauss_legendre(n_theta)
    return np.arccos(x)[::-1], w[::-1]


def total_power_numeric(config: DipoleConfig, units: UnitSystem,
                        radius_lambdas: float = DEFAULT_RADIUS_LAMBDAS,
                        n_theta: int = DEFAULT_N_THETA, n_time: int = DEFAULT_N_TIME) -> float:
    """Simulated time-averaged power through a sphere of ``radius_lambdas`` wavelengths."""
    return total_power_with_pattern(config, units, radius_lambdas, n_theta, n_time)[0]


def total_power_with_pattern(config, units, radius_lambdas=DEFAULT_RADIUS_LAMBDAS,
                             n_theta=DEFAULT_N_THETA, n_time=DEFAULT_N_TIME):
    """Total power plus the numeric pattern on the quadrature nodes."""
    if int(n_theta) != n_theta or n_theta < 8:
        raise ValueError(f"n_theta must be an integer >= 8, got {n_theta!r}")
    thetas, weights = gauss_legendre_thetas(int(n_theta))
    dist = numeric_distribution(thetas, config, units, radius_lambdas, n_time)
    return 2.0 * math.pi * float(weights @ dist.dP_dOmega), dist


def harmonic_spectrum(config: DipoleConfig, units: UnitSystem, obs: ObservationPoint,
                      n_time: int = 256) -> HarmonicSpectrum:
    """Split the radiated intensity at ``obs`` into harmonics of omega.

    The transverse (theta_hat, phi_hat) components of the radiation field
    are sampled over exactly one period and Fourier analysed; both
    polarizations are summed.  Values are power per steradian.
    """
    n_time = int(n_time)
    if n_time < 64 or n_time & (n_time - 1):
        raise ValueError(f"n_time must be a power of two >= 64, got {n_time!r}")
    if obs.r < 10 * config.wavelength(units):
        raise ValueError("harmonic analysis needs a far-zone observer (r >= 10 wavelengths)")
    t = np.arange(n_time) * (config.period / n_time)
    series = field_series(obs, t, config, units)
    scale = units.c * obs.r * obs.r / (4.0 * math.pi)
    total = 0.0
    dc = 0.0
    powers = np.zeros(n_time // 2 + 1)
    for axis in (obs.theta_hat, obs.phi_hat):
        signal = series.e_rad @ axis
        total += float(np.mean(signal * signal))
        coeffs = np.fft.rfft(signal) / n_time
        mag2 = np.abs(coeffs) ** 2
        # one-sided: each interior bin stands for +n and -n
        mag2[1:-1] *= 2.0
        dc += float(mag2[0])
        powers += mag2
    harmonics = [(n, scale * float(p)) for n, p in enumerate(powers) if n >= 1]
    return HarmonicSpectrum(harmonics=harmonics, total=scale * total, dc=scale * dc)
