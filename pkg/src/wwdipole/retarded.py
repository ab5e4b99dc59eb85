"""Retarded-time solver for the axial oscillator.

The emission time ``t_ret`` satisfies ``c (t_obs - t_ret) = |x_obs - x(t_ret)|``.
Writing ``tau = t_obs - t_ret`` the root is bracketed by
``[(r - z0)/c, (r + z0)/c]`` and, for ``v < c``, the residual function
``c tau - |x_obs - x(t_obs - tau)|`` is strictly increasing in ``tau``, so
the root is unique.  The solver bisects to a coarse bracket and finishes
with safeguarded Newton steps using the analytic derivative
``c - nhat . v(t_ret)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .units import DipoleConfig, UnitSystem, require_subluminal

DEFAULT_RTOL = 1e-12
MAX_BISECT = 200
MAX_NEWTON = 20


class NoConvergence(RuntimeError):
    """The retarded-time residual missed its tolerance within the iteration budget."""


@dataclass(frozen=True)
class ObservationPoint:
    """Observer position in spherical coordinates about the oscillation centre."""

    r: float
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r > 0):
            raise ValueError(f"r must be positive and finite, got {self.r!r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta!r}")

    @property
    def cartesian(self) -> np.ndarray:
        st = math.sin(self.theta)
        return self.r * np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    @property
    def r_hat(self) -> np.ndarray:
        return self.cartesian / self.r

    @property
    def theta_hat(self) -> np.ndarray:
        ct, st = math.cos(self.theta), math.sin(self.theta)
        return np.array([ct * math.cos(self.phi), ct * math.sin(self.phi), -st])

    @property
    def phi_hat(self) -> np.ndarray:
        return np.array([-math.sin(self.phi), math.cos(self.phi), 0.0])


@dataclass(frozen=True)
class RetardedSolution:
    t_ret: float
    separation: float
    residual: float


def check_exterior(obs: ObservationPoint, config: DipoleConfig, units: UnitSystem) -> None:
    if not obs.r > config.z0:
        raise ValueError(f"observer radius {obs.r!r} must exceed z0 = {config.z0!r}")
    require_subluminal(config, units)


def solve_retarded_times(obs, t_obs, config, units, rtol=DEFAULT_RTOL):
    """Vectorized solve for one observer and an array of observer times.

    Returns ``(t_ret, separation, residual)`` arrays.  Raises NoConvergence
    if any element misses ``residual <= rtol * r``.
    """
    check_exterior(obs, config, units)
    t_obs = np.atleast_1d(np.asarray(t_obs, dtype=float))
    x, y, z = (np.full(t_obs.shape, comp) for comp in obs.cartesian)
    tau, sep, resid, ok = kernels.solve_delay(
        x, y, z, t_obs, config.z0, config.omega, units.c, rtol, MAX_BISECT, MAX_NEWTON
    )
    if not np.all(ok):
        worst = float(np.max(resid / obs.r))
        raise NoConvergence(f"retarded-time residual {worst:.3e} r exceeds {rtol:.1e} r")
    return t_obs - tau, sep, resid


def solve_retarded_time(
    obs: ObservationPoint,
    t_obs: float,
    config: DipoleConfig,
    units: UnitSystem,
    rtol: float = DEFAULT_RTOL,
) -> RetardedSolution:
    t_ret, sep, resid = solve_retarded_times(obs, [t_obs], config, units, rtol)
    return RetardedSolution(t_ret=float(t_ret[0]), separation=float(sep[0]), residual=float(resid[0]))
