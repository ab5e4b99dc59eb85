"""Weizsaecker-Williams photon-counting estimate for the oscillating charge.

A perturbed charge emits about alpha photons per unit bandwidth per
formation time.  For bounded periodic motion the formation time is one
period, the line at omega absorbs one unit of omega-bandwidth, and the
amplitude of the radiation is suppressed by beta relative to the
relativistic case, so the photon rate is ``alpha beta^2 omega / 2 pi``.
Multiplying by the photon energy hbar omega gives the power.

For a charge other than the unit charge the coupling is rescaled by
``(q / e)^2``; the chain identity ``power = hbar omega rate`` then holds for
any q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .units import DipoleConfig, UnitSystem, beta_max

NORMALIZATIONS = ("paper-literal", "self-consistent")
_ALIASES = {"literal": "paper-literal", "paper-literal": "paper-literal",
            "self-consistent": "self-consistent", "selfcons": "self-consistent"}


def normalization_mode(name: str) -> str:
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}, got {name!r}") from None


@dataclass(frozen=True)
class WWEstimate:
    photon_spectral_density: float
    formation_time: float
    photon_rate: float
    power: float
    beta: float


def photon_spectral_density(units: UnitSystem) -> float:
    """Photons per unit bandwidth per formation time: the fine-structure constant."""
    return units.alpha


def formation_time(config: DipoleConfig) -> float:
    return 2.0 * math.pi / config.omega


def ww_photon_rate(config: DipoleConfig, units: UnitSystem) -> float:
    beta = beta_max(config, units)
    coupling = units.alpha * (config.q / units.charge_unit) ** 2
    return coupling * beta * beta / formation_time(config)


def ww_power(config: DipoleConfig, units: UnitSystem) -> float:
    """Estimated radiated power, ``p0^2 omega^4 / (2 pi c^3)``."""
    p0, w, c = config.p0, config.omega, units.c
    return p0 * p0 * w ** 4 / (2.0 * math.pi * c ** 3)


def ww_estimate(config: DipoleConfig, units: UnitSystem) -> WWEstimate:
    return WWEstimate(
        photon_spectral_density=photon_spectral_density(units),
        formation_time=formation_time(config),
        photon_rate=ww_photon_rate(config, units),
        power=ww_power(config, units),
        beta=beta_max(config, units),
    )


def ww_angular(theta, config: DipoleConfig, units: UnitSystem, normalization: str = "self-consistent"):
    """Estimated power per steradian, proportional to sin^2 theta.

    ``paper-literal`` uses the coefficient ``3 p0^2 omega^4 / (8 pi^2 c^3)``
    as published, whose solid-angle integral is twice ``ww_power``.
    ``self-consistent`` scales the same shape to integrate to ``ww_power``.
    """
    mode = normalization_mode(normalization)
    s2 = np.sin(np.asarray(theta, dtype=float)) ** 2
    if np.ndim(s2) == 0:
        s2 = float(s2)
    if mode == "paper-literal":
        p0, w, c = config.p0, config.omega, units.c
        return 3.0 * p0 * p0 * w ** 4 / (8.0 * math.pi ** 2 * c ** 3) * s2
    return ww_power(config, units) * 3.0 / (8.0 * math.pi) * s2
