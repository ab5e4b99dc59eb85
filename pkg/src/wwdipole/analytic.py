"""Closed-form Hertzian dipole results and the radiation-reaction balance."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .units import DipoleConfig, UnitSystem, kinematics
from .ww import normalization_mode


@dataclass(frozen=True)
class ReactionSample:
    t: float
    F_react: np.ndarray
    P_react: float


def exact_average_power(config: DipoleConfig, units: UnitSystem) -> float:
    """Time-averaged power of ``p = p0 cos(omega t)``: ``p0^2 omega^4 / (3 c^3)``."""
    p0, w, c = config.p0, config.omega, units.c
    return p0 * p0 * w ** 4 / (3.0 * c ** 3)


def exact_angular(theta, config: DipoleConfig, units: UnitSystem, normalization: str = "self-consistent"):
    """Hertzian sin^2 theta pattern.

    ``paper-literal`` returns ``p0^2 omega^4 / (4 pi c^3) sin^2 theta`` as
    published (integrating to twice the average power); ``self-consistent``
    returns ``p0^2 omega^4 / (8 pi c^3) sin^2 theta``.
    """
    mode = normalization_mode(normalization)
    s2 = np.sin(np.asarray(theta, dtype=float)) ** 2
    if np.ndim(s2) == 0:
        s2 = float(s2)
    if mode == "paper-literal":
        p0, w, c = config.p0, config.omega, units.c
        return p0 * p0 * w ** 4 / (4.0 * math.pi * c ** 3) * s2
    return exact_average_power(config, units) * 3.0 / (8.0 * math.pi) * s2


def _reaction_coefficient(config, units):
    return 2.0 * config.q * config.q / (3.0 * units.c ** 3)


def instantaneous_larmor_power(config: DipoleConfig, units: UnitSystem, t):
    """Larmor power ``2 q^2 a(t)^2 / (3 c^3)``."""
    a = kinematics(config, t).a
    return _reaction_coefficient(config, units) * a * a


def reaction_power(config: DipoleConfig, units: UnitSystem, t: float) -> ReactionSample:
    """Abraham-Lorentz force ``(2 q^2 / 3 c^3) jerk`` and its power on the charge."""
    state = kinematics(config, t)
    fz = _reaction_coefficient(config, units) * state.jerk
    return ReactionSample(t=t, F_react=np.array([0.0, 0.0, fz]), P_react=fz * state.v)


def average_larmor_power(config: DipoleConfig, units: UnitSystem, n_samples: int | None = None) -> float:
    """Period average of the Larmor power.

    With ``n_samples`` the average is the periodic trapezoid rule over that
    many samples; otherwise it uses ``<cos^2> = 1/2``.
    """
    if n_samples is None:
        return _reaction_coefficient(config, units) * (config.z0 * config.omega ** 2) ** 2 / 2.0
    t = np.arange(n_samples) * (config.period / n_samples)
    return float(np.mean(instantaneous_larmor_power(config, units, t)))


def average_reaction_power(config: DipoleConfig, units: UnitSystem, n_samples: int | None = None) -> float:
    """Period average of ``F_react . v``; equals minus the average Larmor power."""
    coeff = _reaction_coefficient(config, units)
    if n_samples is None:
        # jerk * v = -z0^2 omega^4 sin^2, averaging to half of that
        return -coeff * (config.z0 * config.omega ** 2) ** 2 / 2.0
    t = np.arange(n_samples) * (config.period / n_samples)
    state = kinematics(config, t)
    return float(np.mean(coeff * state.jerk * state.v))
