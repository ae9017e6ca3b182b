"""Trapezoidal slider motion plans and their pullback to crank-joint motion."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DeadCenterError
from .mechanism import (
    CrankSliderGeometry,
    JointState,
    joint_from_slider,
    kic_first,
    kic_second,
)

KIC_SINGULAR_TOL = 1e-9


@dataclass(frozen=True)
class TrapezoidProfile:
    """Accel / cruise / decel position profile between x0 and xf.

    Degenerates to a triangular profile (t_cruise = 0, v_peak < v_max) when
    the move is too short to reach cruise speed, and to a zero-duration
    profile when x0 = xf.
    """

    x0: float
    xf: float
    v_max: float
    a_max: float
    sign: float
    t_acc: float
    t_cruise: float
    t_dec: float
    v_peak: float

    @property
    def total_time(self) -> float:
        return self.t_acc + self.t_cruise + self.t_dec


def plan_trapezoid(
    x0: float, xf: float, v_max: float, a_max: float
) -> TrapezoidProfile:
    """Plan the time-optimal trapezoid under symmetric accel/decel limits."""
    if v_max <= 0.0 or a_max <= 0.0:
        raise ValueError("v_max and a_max must be positive")
    d = abs(xf - x0)
    if d == 0.0:
        return TrapezoidProfile(x0, xf, v_max, a_max, 0.0, 0.0, 0.0, 0.0, 0.0)
    sign = math.copysign(1.0, xf - x0)
    t_ramp = v_max / a_max
    d_ramp = 0.5 * a_max * t_ramp * t_ramp
    if d < 2.0 * d_ramp:
        t_ramp = math.sqrt(d / a_max)
        return TrapezoidProfile(
            x0, xf, v_max, a_max, sign, t_ramp, 0.0, t_ramp, a_max * t_ramp
        )
    t_cruise = (d - 2.0 * d_ramp) / v_max
    return TrapezoidProfile(
        x0, xf, v_max, a_max, sign, t_ramp, t_cruise, t_ramp, v_max
    )


def sample(p: TrapezoidProfile, t: float) -> tuple[float, float, float]:
    """Evaluate (x, x_dot, x_ddot) at time t; t is clamped to [0, T]."""
    total = p.total_time
    if total == 0.0:
        return (p.x0, 0.0, 0.0)
    t = min(max(t, 0.0), total)
    a, s = p.a_max, p.sign
    if t <= p.t_acc:
        return (p.x0 + s * 0.5 * a * t * t, s * a * t, s * a)
    if t <= p.t_acc + p.t_cruise:
        d_ramp = 0.5 * a * p.t_acc * p.t_acc
        x = p.x0 + s * (d_ramp + p.v_peak * (t - p.t_acc))
        return (x, s * p.v_peak, 0.0)
    td = total - t
    return (p.xf - s * 0.5 * a * td * td, s * a * td, -s * a)


def joint_trajectory(
    p: TrapezoidProfile, g: CrankSliderGeometry, t: float
) -> JointState:
    """Joint state driving the sampled slider motion at time t.

    theta_dot = x_dot / G, theta_ddot = (x_ddot - H*theta_dot^2) / G.
    Raises DeadCenterError where |G| vanishes (stroke ends).
    """
    x, x_dot, x_ddot = sample(p, t)
    theta = joint_from_slider(g, x)
    gi = kic_first(g, theta)
    if abs(gi) < KIC_SINGULAR_TOL:
        raise DeadCenterError(f"dead-center configuration at theta={theta}")
    theta_dot = x_dot / gi
    theta_ddot = (x_ddot - kic_second(g, theta) * theta_dot * theta_dot) / gi
    return JointState(theta=theta, theta_dot=theta_dot, theta_ddot=theta_ddot)
