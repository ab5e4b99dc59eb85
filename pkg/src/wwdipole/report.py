"""Comparison reports and angular-pattern tables, plus their serializers."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .analytic import (
    average_larmor_power,
    average_reaction_power,
    exact_angular,
    exact_average_power,
)
from .radiometry import (
    DEFAULT_N_THETA,
    DEFAULT_N_TIME,
    DEFAULT_RADIUS_LAMBDAS,
    harmonic_spectrum,
    numeric_distribution,
    total_power_with_pattern,
)
from .retarded import ObservationPoint
from .units import STRAINED_WARNING, DipoleConfig, UnitSystem, is_strained, require_subluminal
from .ww import formation_time, normalization_mode, photon_spectral_density, ww_angular, ww_photon_rate, ww_power

BANDWIDTH_RATIO = 2.0 * math.pi / 3.0
HARMONIC_SAMPLES = 256

PATTERN_COLUMNS = ("theta_rad", "ww_literal", "ww_selfcons", "exact_literal", "exact_selfcons", "numeric")


@dataclass
class NumericParams:
    radius_lambdas: float = DEFAULT_RADIUS_LAMBDAS
    n_theta: int = DEFAULT_N_THETA
    n_time: int = DEFAULT_N_TIME


@dataclass
class ComparisonReport:
    q: float
    z0: float
    omega: float
    beta: float
    p0: float
    p_ww: float
    p_exact: float
    p_numeric: float
    ratio_ww_exact: float
    ratio_numeric_exact: float
    bandwidth_ratio: float
    pattern_residual: float
    fundamental_fraction: float
    numeric_params: NumericParams
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["metadata"] = {"version": __version__}
        return out


def _echo(config: DipoleConfig, units: UnitSystem) -> dict:
    beta = require_subluminal(config, units)
    return {"q": config.q, "z0": config.z0, "omega": config.omega, "beta": beta, "p0": config.p0}


def _warnings(config, units) -> list[str]:
    return [STRAINED_WARNING] if is_strained(config, units) else []


def run_compare(config: DipoleConfig, units: UnitSystem, params: NumericParams | None = None) -> ComparisonReport:
    params = params or NumericParams()
    echo = _echo(config, units)
    p_ww = ww_power(config, units)
    p_exact = exact_average_power(config, units)
    p_numeric, dist = total_power_with_pattern(config, units, params.radius_lambdas, params.n_theta, params.n_time)
    _, residual = dist.fit_sin2()
    obs = ObservationPoint(params.radius_lambdas * config.wavelength(units), math.pi / 2)
    spectrum = harmonic_spectrum(config, units, obs, HARMONIC_SAMPLES)
    return ComparisonReport(
        **echo,
        p_ww=p_ww,
        p_exact=p_exact,
        p_numeric=p_numeric,
        ratio_ww_exact=p_ww / p_exact,
        ratio_numeric_exact=p_numeric / p_exact,
        bandwidth_ratio=p_exact / p_ww,
        pattern_residual=residual,
        fundamental_fraction=spectrum.fraction(1),
        numeric_params=params,
        warnings=_warnings(config, units),
    )


def run_estimate(config, units, normalization="self-consistent") -> dict:
    mode = normalization_mode(normalization)
    out = _echo(config, units)
    out.update(
        photon_spectral_density=photon_spectral_density(units),
        formation_time=formation_time(config),
        photon_rate=ww_photon_rate(config, units),
        p_ww=ww_power(config, units),
        normalization=mode,
        peak_dP_dOmega=ww_angular(math.pi / 2, config, units, mode),
        warnings=_warnings(config, units),
    )
    return out


def run_exact(config, units, normalization="self-consistent") -> dict:
    mode = normalization_mode(normalization)
    out = _echo(config, units)
    out.update(
        p_exact=exact_average_power(config, units),
        larmor_average=average_larmor_power(config, units),
        reaction_average=average_reaction_power(config, units),
        normalization=mode,
        peak_dP_dOmega=exact_angular(math.pi / 2, config, units, mode),
        warnings=_warnings(config, units),
    )
    return out


def run_simulate(config, units, params: NumericParams | None = None) -> dict:
    params = params or NumericParams()
    out = _echo(config, units)
    p_numeric, dist = total_power_with_pattern(config, units, params.radius_lambdas, params.n_theta, params.n_time)
    amplitude, residual = dist.fit_sin2()
    obs = ObservationPoint(params.radius_lambdas * config.wavelength(units), math.pi / 2)
    spectrum = harmonic_spectrum(config, units, obs, HARMONIC_SAMPLES)
    out.update(
        p_numeric=p_numeric,
        pattern_amplitude=amplitude,
        pattern_residual=residual,
        fundamental_fraction=spectrum.fraction(1),
        third_harmonic_fraction=spectrum.fraction(3),
        numeric_params=asdict(params),
        warnings=_warnings(config, units),
    )
    return out


def emit_pattern(config, units, n_theta: int = DEFAULT_N_THETA,
                 radius_lambdas: float = DEFAULT_RADIUS_LAMBDAS, n_time: int = DEFAULT_N_TIME) -> list[tuple]:
    """Rows over ``n_theta + 1`` evenly spaced angles from 0 to pi inclusive."""
    if int(n_theta) != n_theta or n_theta < 2:
        raise ValueError(f"n_theta must be an integer >= 2, got {n_theta!r}")
    require_subluminal(config, units)
    thetas = np.linspace(0.0, math.pi, int(n_theta) + 1)
    numeric = numeric_distribution(thetas, config, units, radius_lambdas, n_time).dP_dOmega
    rows = []
    for theta, num in zip(thetas, numeric):
        rows.append((
            float(theta),
            ww_angular(theta, config, units, "paper-literal"),
            ww_angular(theta, config, units, "self-consistent"),
            exact_angular(theta, config, units, "paper-literal"),
            exact_angular(theta, config, units, "self-consistent"),
            float(num),
        ))
    return rows


# ---- serialization ---------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12e}"
    if isinstance(value, (list, tuple)):
        return "; ".join(_fmt(v) for v in value)
    return str(value)


def _flatten(record: dict) -> dict:
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict):
            for sub, inner in value.items():
                flat[f"{key}.{sub}"] = inner
        else:
            flat[key] = value
    return flat


def format_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    flat = _flatten(record)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(flat.keys())
        writer.writerow(_fmt(v) for v in flat.values())
        return buf.getvalue()
    width = max(len(k) for k in flat)
    return "".join(f"{k:<{width}}  {_fmt(v)}\n" for k, v in flat.items())


def format_pattern(rows: list[tuple], fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        payload = {col: [row[i] for row in rows] for i, col in enumerate(PATTERN_COLUMNS)}
        if meta:
            payload = {**meta, **payload}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(PATTERN_COLUMNS)
        for row in rows:
            writer.writerow(f"{v:.12e}" for v in row)
        return buf.getvalue()
    cells = [PATTERN_COLUMNS] + [tuple(f"{v:.10e}" for v in row) for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(PATTERN_COLUMNS))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in cells)


# ---- round-trip validation -------------------------------------------------

REPORT_KEYS = set(ComparisonReport.__dataclass_fields__) | {"metadata"}


def check_report(data: dict, rtol: float = 1e-12) -> list[str]:
    """Re-derive every internal ratio of a serialized comparison report.

    Returns a list of problems; an empty list means the report is consistent.
    """
    problems = []
    missing = REPORT_KEYS - set(data)
    extra = set(data) - REPORT_KEYS
    if missing:
        problems.append(f"missing keys: {sorted(missing)}")
    if extra:
        problems.append(f"unexpected keys: {sorted(extra)}")
    if problems:
        return problems

    def close(a, b, tol=rtol):
        return abs(a - b) <= tol * max(abs(a), abs(b))

    for key in ("p_ww", "p_exact", "p_numeric"):
        if not data[key] >= 0:
            problems.append(f"{key} is negative")
    if not close(data["p0"], data["q"] * data["z0"]):
        problems.append("p0 != q * z0")
    if not close(data["ratio_ww_exact"], data["p_ww"] / data["p_exact"]):
        problems.append("ratio_ww_exact != p_ww / p_exact")
    if not close(data["ratio_ww_exact"], 3.0 / (2.0 * math.pi)):
        problems.append("ratio_ww_exact != 3 / (2 pi)")
    if not close(data["ratio_numeric_exact"], data["p_numeric"] / data["p_exact"]):
        problems.append("ratio_numeric_exact != p_numeric / p_exact")
    if not close(data["bandwidth_ratio"], BANDWIDTH_RATIO):
        problems.append("bandwidth_ratio != 2 pi / 3")
    if not 0.0 <= data["fundamental_fraction"] <= 1.0 + 1e-9:
        problems.append("fundamental_fraction outside [0, 1]")
    strained = data["beta"] > 0.1
    if strained != (STRAINED_WARNING in data["warnings"]):
        problems.append("warnings inconsistent with beta")
    return problems
