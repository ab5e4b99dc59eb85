"""Lienard-Wiechert fields of the oscillating point charge.

Both the velocity (1/R^2) and acceleration (1/R) terms are always
evaluated; nothing here assumes the far zone.  Vectors are Cartesian with
the oscillation along +z.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .retarded import DEFAULT_RTOL, MAX_BISECT, MAX_NEWTON, NoConvergence, ObservationPoint, check_exterior
from .units import DipoleConfig, UnitSystem


@dataclass(frozen=True)
class FieldSample:
    E: np.ndarray
    B: np.ndarray
    t_obs: float
    t_ret: float
    n_hat: np.ndarray


@dataclass(frozen=True)
class FieldSeries:
    """Fields at one observer for an array of observer times.

    ``e_vel`` and ``e_rad`` are the velocity and acceleration parts of E;
    all vector arrays have shape (N, 3).
    """

    t_obs: np.ndarray
    t_ret: np.ndarray
    e_vel: np.ndarray
    e_rad: np.ndarray
    n_hat: np.ndarray

    @property
    def E(self) -> np.ndarray:
        return self.e_vel + self.e_rad

    @property
    def B(self) -> np.ndarray:
        return np.cross(self.n_hat, self.E)

    def sample(self, i: int) -> FieldSample:
        return FieldSample(
            E=self.E[i], B=self.B[i], t_obs=float(self.t_obs[i]), t_ret=float(self.t_ret[i]),
            n_hat=self.n_hat[i],
        )


def evaluate_grid(xyz, t_obs, config: DipoleConfig, units: UnitSystem, rtol=DEFAULT_RTOL):
    """Raw kernel call over flat arrays of observer positions (N, 3) and times (N,).

    Returns ``(e_vel, e_rad, n_hat, t_ret)``; callers validate the geometry.
    """
    xyz = np.asarray(xyz, dtype=float)
    t_obs = np.asarray(t_obs, dtype=float)
    e_vel, e_acc, nhat, tau, resid, ok = kernels.lw_fields(
        xyz[:, 0], xyz[:, 1], xyz[:, 2], t_obs,
        config.q, config.z0, config.omega, units.c, rtol, MAX_BISECT, MAX_NEWTON,
    )
    if not np.all(ok):
        r = np.linalg.norm(xyz, axis=1)
        raise NoConvergence(f"retarded-time residual {np.max(resid / r):.3e} r exceeds {rtol:.1e} r")
    return e_vel, e_acc, nhat, t_obs - tau


def field_series(obs: ObservationPoint, t_obs, config: DipoleConfig, units: UnitSystem,
                 rtol=DEFAULT_RTOL) -> FieldSeries:
    check_exterior(obs, config, units)
    t_obs = np.atleast_1d(np.asarray(t_obs, dtype=float))
    xyz = np.broadcast_to(obs.cartesian, (t_obs.size, 3))
    e_vel, e_rad, nhat, t_ret = evaluate_grid(xyz, t_obs, config, units, rtol)
    return FieldSeries(t_obs=t_obs, t_ret=t_ret, e_vel=e_vel, e_rad=e_rad, n_hat=nhat)


def lw_field(obs: ObservationPoint, t_obs: float, config: DipoleConfig, units: UnitSystem) -> FieldSample:
    """Full Lienard-Wiechert E and B = n_hat x E at one observer time."""
    return field_series(obs, [t_obs], config, units).sample(0)


def velocity_field(obs: ObservationPoint, t_obs: float, config: DipoleConfig, units: UnitSystem) -> np.ndarray:
    return field_series(obs, [t_obs], config, units).e_vel[0]


def radiation_field(obs: ObservationPoint, t_obs: float, config: DipoleConfig, units: UnitSystem) -> np.ndarray:
    """Acceleration (1/R) part of E alone."""
    return field_series(obs, [t_obs], config, units).e_rad[0]
