"""Crank-slider kinematics and the equivalent rotary inertia at the crank.

Loop closure for crank radius r, coupler length l, crank angle theta:

    x(theta) = r*cos(theta) + sqrt(l^2 - r^2*sin^2(theta))

With r < l the radicand stays positive and x is strictly decreasing on
(0, pi), so the slider-to-angle inversion is unique on that branch.

The mechanism is reduced to a single configuration-dependent inertia at the
crank joint by lumping half the coupler mass at each of its pin joints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import StrokeError


@dataclass(frozen=True)
class CrankSliderGeometry:
    """Crank radius and coupler length in meters; requires 0 < r < l."""

    crank_r: float
    coupler_l: float

    def __post_init__(self):
        if not 0.0 < self.crank_r < self.coupler_l:
            raise ValueError("geometry requires 0 < crank_r < coupler_l")

    @property
    def stroke(self) -> tuple[float, float]:
        """Reachable slider range [l - r, l + r]."""
        return (self.coupler_l - self.crank_r, self.coupler_l + self.crank_r)


@dataclass(frozen=True)
class MechanismMasses:
    """Crank inertia about its pivot, coupler mass, slider mass."""

    i_crank: float = 0.0
    m_coupler: float = 0.0
    m_slider: float = 0.0

    def __post_init__(self):
        if self.i_crank < 0.0 or self.m_coupler < 0.0 or self.m_slider < 0.0:
            raise ValueError("masses and inertias must be nonnegative")


@dataclass(frozen=True)
class JointState:
    """Crank angle and its first two time derivatives."""

    theta: float
    theta_dot: float = 0.0
    theta_ddot: float = 0.0


def slider_position(g: CrankSliderGeometry, theta: float) -> float:
    """Slider displacement from the crank pivot."""
    r, l = g.crank_r, g.coupler_l
    s = math.sin(theta)
    return r * math.cos(theta) + math.sqrt(l * l - r * r * s * s)


def kic_first(g: CrankSliderGeometry, theta: float) -> float:
    """First kinematic influence coefficient G = dx/dtheta."""
    r, l = g.crank_r, g.coupler_l
    s, c = math.sin(theta), math.cos(theta)
    q = math.sqrt(l * l - r * r * s * s)
    return -r * s - r * r * s * c / q


def kic_second(g: CrankSliderGeometry, theta: float) -> float:
    """Second kinematic influence coefficient H = d^2x/dtheta^2."""
    r, l = g.crank_r, g.coupler_l
    s, c = math.sin(theta), math.cos(theta)
    q = math.sqrt(l * l - r * r * s * s)
    r2 = r * r
    return -r * c - r2 * (c * c - s * s) / q - r2 * r2 * s * s * c * c / q**3


def joint_from_slider(g: CrankSliderGeometry, x: float) -> float:
    """Invert slider_position on the working branch theta in [0, pi].

    Bracketing root-finder; the monotone stroke guarantees uniqueness.
    Raises StrokeError when x is outside [l - r, l + r].
    """
    lo, hi = g.stroke
    if not lo <= x <= hi:
        raise StrokeError(f"slider position {x} outside stroke [{lo}, {hi}]")
    if x == hi:
        return 0.0
    if x == lo:
        return math.pi
    return brentq(lambda th: slider_position(g, th) - x, 0.0, math.pi, xtol=1e-13)


def effective_inertia(
    g: CrankSliderGeometry, m: MechanismMasses, theta: float
) -> float:
    """Equivalent rotary inertia at the crank joint for this configuration.

    Half the coupler mass rides the crank pin (speed r*theta_dot), the other
    half moves with the slider (speed |G|*theta_dot).
    """
    half = 0.5 * m.m_coupler
    gi = kic_first(g, theta)
    return m.i_crank + half * g.crank_r**2 + (half + m.m_slider) * gi * gi
