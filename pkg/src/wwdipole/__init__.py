"""Radiation from a charge oscillating as z = z0 cos(omega t), computed three ways.

* ``ww``: Weizsaecker-Williams photon-counting estimate
* ``analytic``: exact Hertzian dipole formulas and radiation reaction
* ``radiometry`` on top of ``fields``/``retarded``: Lienard-Wiechert simulation
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .analytic import (
    ReactionSample,
    average_larmor_power,
    average_reaction_power,
    exact_angular,
    exact_average_power,
    instantaneous_larmor_power,
    reaction_power,
)
from .fields import FieldSample, lw_field, radiation_field
from .radiometry import (
    AngularDistribution,
    HarmonicSpectrum,
    angular_power,
    harmonic_spectrum,
    poynting,
    total_power_numeric,
)
from .retarded import NoConvergence, ObservationPoint, RetardedSolution, solve_retarded_time
from .units import DipoleConfig, KinematicState, UnitSystem, beta_max, dipole_moment, kinematics
from .ww import (
    WWEstimate,
    formation_time,
    photon_spectral_density,
    ww_angular,
    ww_photon_rate,
    ww_power,
)
