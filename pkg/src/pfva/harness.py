"""Configuration loading, time-stepped simulation, rho sweeps, CSV output."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .coupling import MotorInertias, coupling_mu
from .dynamics import AllocationPolicy, allocate, inertial_torques
from .errors import ConfigError, StrokeError
from .gear_train import reductions_from_rho
from .mechanism import CrankSliderGeometry, MechanismMasses, effective_inertia
from .trajectory import joint_trajectory, plan_trapezoid, sample


@dataclass
class ExperimentConfig:
    """Full parameter set for one simulation or sweep.

    Defaults reproduce the reference run: stroke 0.3263 m -> 0.5873 m on a
    0.15 m crank / 0.45 m coupler, 0.3 m/s and 1 m/s^2 limits, 1 kHz
    sampling, rho swept 5..15.
    """

    crank_r: float = 0.15
    coupler_l: float = 0.45
    i_crank: float = 0.01
    m_coupler: float = 0.5
    m_slider: float = 1.0
    i_motor_v: float = 0.0
    i_motor_f: float = 0.0
    x0: float = 0.3263
    xf: float = 0.5873
    v_max: float = 0.3
    a_max: float = 1.0
    sample_rate_hz: float = 1000.0
    rho: float = 5.0
    rho_sweep: list[float] = field(
        default_factory=lambda: [float(r) for r in range(5, 16)]
    )
    policy: AllocationPolicy = AllocationPolicy.VELOCITY_ONLY
    out: str = "pfva_out.csv"

    def geometry(self) -> CrankSliderGeometry:
        return CrankSliderGeometry(self.crank_r, self.coupler_l)

    def masses(self) -> MechanismMasses:
        return MechanismMasses(self.i_crank, self.m_coupler, self.m_slider)

    def motor_inertias(self) -> MotorInertias:
        return MotorInertias(self.i_motor_v, self.i_motor_f)

    def validate(self) -> None:
        if not 0.0 < self.crank_r < self.coupler_l:
            raise ConfigError("need 0 < crank_r < coupler_l")
        if min(self.i_crank, self.m_coupler, self.m_slider) < 0.0:
            raise ConfigError("masses and inertias must be nonnegative")
        if min(self.i_motor_v, self.i_motor_f) < 0.0:
            raise ConfigError("motor inertias must be nonnegative")
        if self.v_max <= 0.0 or self.a_max <= 0.0:
            raise ConfigError("v_max and a_max must be positive")
        if self.sample_rate_hz <= 0.0:
            raise ConfigError("sample_rate_hz must be positive")
        if self.rho == -1.0:
            raise ConfigError("rho = -1 is singular")
        if not self.rho_sweep:
            raise ConfigError("rho_sweep must be nonempty")
        if any(r == -1.0 for r in self.rho_sweep):
            raise ConfigError("rho_sweep must not contain -1")


@dataclass
class SimulationRecord:
    """One time sample of the simulated system; field order is the CSV order."""

    t: float
    x: float
    x_dot: float
    x_ddot: float
    theta: float
    theta_dot: float
    theta_ddot: float
    i_joint: float
    mu: float
    phi_v_ddot: float
    phi_f_ddot: float
    tau_v_inertial: float
    tau_f_inertial: float
    coupling_on_v: float
    coupling_on_f: float


@dataclass
class SweepRow:
    """Per-rho summary statistics over a full simulation run."""

    rho: float
    peak_coupling_torque: float
    peak_mu: float
    mean_mu: float
    peak_tau_v: float
    peak_tau_f: float


_FLOAT_KEYS = {
    "crank_r", "coupler_l", "i_crank", "m_coupler", "m_slider",
    "i_motor_v", "i_motor_f", "x0", "xf", "v_max", "a_max",
    "sample_rate_hz", "rho",
}


def load_config(path: str | Path) -> ExperimentConfig:
    """Parse a flat key = value config file with # comments.

    Unknown keys are errors; missing keys fall back to the defaults above.
    """
    cfg = ExperimentConfig()
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        try:
            if key in _FLOAT_KEYS:
                setattr(cfg, key, float(value))
            elif key == "rho_sweep":
                cfg.rho_sweep = [float(v) for v in value.split(",") if v.strip()]
            elif key == "policy":
                cfg.policy = AllocationPolicy(value)
            elif key == "out":
                cfg.out = value
            else:
                raise ConfigError(f"{path}:{lineno}: unknown key '{key}'")
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for '{key}': {exc}")
    cfg.validate()
    return cfg


def _sample_times(total: float, rate: float) -> list[float]:
    dt = 1.0 / rate
    n = int(math.floor(total * rate + 1e-9))
    times = [k * dt for k in range(n + 1)]
    if times[-1] < total - 1e-12:
        times.append(total)
    return times


def run_simulation(cfg: ExperimentConfig, rho: float) -> list[SimulationRecord]:
    """Simulate the crank-slider under the trapezoidal plan at one rho."""
    cfg.validate()
    geom = cfg.geometry()
    masses = cfg.masses()
    motors = cfg.motor_inertias()
    lo, hi = geom.stroke
    for x in (cfg.x0, cfg.xf):
        if not lo < x < hi:
            raise StrokeError(
                f"profile endpoint {x} outside mechanism stroke ({lo}, {hi})"
            )
    g = reductions_from_rho(rho)
    profile = plan_trapezoid(cfg.x0, cfg.xf, cfg.v_max, cfg.a_max)
    records = []
    for t in _sample_times(profile.total_time, cfg.sample_rate_hz):
        x, x_dot, x_ddot = sample(profile, t)
        joint = joint_trajectory(profile, geom, t)
        i_joint = effective_inertia(geom, masses, joint.theta)
        motion = allocate(joint, g, cfg.policy)
        torques = inertial_torques(motion, rho, i_joint, motors)
        records.append(SimulationRecord(
            t=t,
            x=x,
            x_dot=x_dot,
            x_ddot=x_ddot,
            theta=joint.theta,
            theta_dot=joint.theta_dot,
            theta_ddot=joint.theta_ddot,
            i_joint=i_joint,
            mu=coupling_mu(rho, i_joint),
            phi_v_ddot=motion.phi_v_ddot,
            phi_f_ddot=motion.phi_f_ddot,
            tau_v_inertial=torques.tau_v_inertial,
            tau_f_inertial=torques.tau_f_inertial,
            coupling_on_v=torques.coupling_on_v,
            coupling_on_f=torques.coupling_on_f,
        ))
    return records


def summarize(rho: float, records: Sequence[SimulationRecord]) -> SweepRow:
    """Reduce one run to its sweep statistics."""
    return SweepRow(
        rho=rho,
        peak_coupling_torque=max(
            max(abs(r.coupling_on_v), abs(r.coupling_on_f)) for r in records
        ),
        peak_mu=max(r.mu for r in records),
        mean_mu=sum(r.mu for r in records) / len(records),
        peak_tau_v=max(abs(r.tau_v_inertial) for r in records),
        peak_tau_f=max(abs(r.tau_f_inertial) for r in records),
    )


def sweep_rho(cfg: ExperimentConfig, rhos: Sequence[float]) -> list[SweepRow]:
    """Run the full simulation at each rho and summarize."""
    rows = []
    for rho in rhos:
        try:
            rows.append(summarize(rho, run_simulation(cfg, rho)))
        except Exception as exc:
            raise type(exc)(f"rho={rho}: {exc}") from exc
    return rows


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def emit_csv(rows: Sequence, path: str | Path, record_type=None) -> None:
    """Write dataclass rows as CSV; header from the dataclass field order.

    record_type is only needed for an empty row list.
    """
    if rows:
        record_type = type(rows[0])
    elif record_type is None:
        raise ValueError("record_type required for an empty row list")
    names = [f.name for f in dataclasses.fields(record_type)]
    try:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(names) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(getattr(row, n)) for n in names) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc
