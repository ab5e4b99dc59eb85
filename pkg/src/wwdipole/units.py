"""Unit conventions, the oscillator configuration and its analytic trajectory.

Two unit systems are supported.  Gaussian CGS is native: every formula in
this package is written in Gaussian form and evaluates verbatim.  The
dimensionless mode sets c = 1 and the elementary charge to 1, takes the
fine-structure constant as input, and derives hbar from it so that the
photon-counting chain (power = hbar * omega * photon rate) is an identity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# CODATA 2018; c, e and h are exact in SI.
SPEED_OF_LIGHT_CGS = 2.99792458e10  # cm/s
ELEMENTARY_CHARGE_CGS = 1.602176634e-19 * 2.99792458e9  # esu
HBAR_CGS = 6.62607015e-27 / (2.0 * math.pi)  # erg s
DEFAULT_ALPHA = 7.2973525693e-3

STRAINED_BETA = 0.1
STRAINED_WARNING = "nonrelativistic assumption strained"


@dataclass(frozen=True)
class UnitSystem:
    """Physical constants every formula evaluates under.

    ``charge_unit`` is the elementary charge in this system; ``alpha`` is
    always ``charge_unit**2 / (hbar * c)``.
    """

    c: float
    hbar: float
    alpha: float
    charge_unit: float
    mode: str

    def __post_init__(self):
        for name in ("c", "hbar", "alpha", "charge_unit"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        if self.mode not in ("gaussian", "dimensionless"):
            raise ValueError(f"unknown unit mode {self.mode!r}")

    @classmethod
    def gaussian(cls) -> "UnitSystem":
        c, e, hbar = SPEED_OF_LIGHT_CGS, ELEMENTARY_CHARGE_CGS, HBAR_CGS
        return cls(c=c, hbar=hbar, alpha=e * e / (hbar * c), charge_unit=e, mode="gaussian")

    @classmethod
    def dimensionless(cls, alpha: float = DEFAULT_ALPHA) -> "UnitSystem":
        if not (math.isfinite(alpha) and alpha > 0):
            raise ValueError(f"alpha must be positive and finite, got {alpha!r}")
        return cls(c=1.0, hbar=1.0 / alpha, alpha=alpha, charge_unit=1.0, mode="dimensionless")


@dataclass(frozen=True)
class DipoleConfig:
    """A charge ``q`` oscillating as ``z(t) = z0 cos(omega t)``.

    ``z0 == 0`` is accepted as the static-charge limit; the command line
    front end insists on ``z0 > 0``.
    """

    q: float
    z0: float
    omega: float

    def __post_init__(self):
        if not math.isfinite(self.q):
            raise ValueError(f"charge must be finite, got {self.q!r}")
        if not (math.isfinite(self.z0) and self.z0 >= 0):
            raise ValueError(f"z0 must be non-negative and finite, got {self.z0!r}")
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise ValueError(f"omega must be positive and finite, got {self.omega!r}")

    @property
    def p0(self) -> float:
        return self.q * self.z0

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    def wavelength(self, units: UnitSystem) -> float:
        return 2.0 * math.pi * units.c / self.omega


@dataclass(frozen=True)
class KinematicState:
    t: float
    z: float
    v: float
    a: float
    jerk: float


def beta_max(config: DipoleConfig, units: UnitSystem) -> float:
    """Peak speed of the oscillator in units of c."""
    return config.z0 * config.omega / units.c


def dipole_moment(config: DipoleConfig) -> float:
    """Peak dipole moment ``q * z0``."""
    return config.q * config.z0


def require_subluminal(config: DipoleConfig, units: UnitSystem) -> float:
    """Return beta_max, raising ValueError when the motion reaches c."""
    beta = beta_max(config, units)
    if beta >= 1.0:
        raise ValueError(f"beta_max = {beta:.6g} >= 1; the oscillator would be superluminal")
    return beta


def is_strained(config: DipoleConfig, units: UnitSystem) -> bool:
    return beta_max(config, units) > STRAINED_BETA


def kinematics(config: DipoleConfig, t) -> KinematicState:
    """Analytic position, velocity, acceleration and jerk at time ``t``.

    ``t`` may be a numpy array, in which case every field is an array.
    """
    z0, w = config.z0, config.omega
    phase = w * np.asarray(t, dtype=float)
    c, s = np.cos(phase), np.sin(phase)
    if phase.ndim == 0:
        c, s = float(c), float(s)
    return KinematicState(
        t=t,
        z=z0 * c,
        v=-z0 * w * s,
        a=-z0 * w * w * c,
        jerk=z0 * w * w * w * s,
    )
