"""Reflected inertia at the two transmission inputs and the coupling term.

A joint inertia I seen through the velocity ratios [1/(rho+1), rho/(rho+1)]
appears at the inputs as the rank-1 matrix I * v^T v added to the motor rotor
inertias. Its off-diagonal entry

    mu(rho) = I * rho / (rho + 1)^2

is the inertia through which each input's acceleration loads the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularParameterError


@dataclass(frozen=True)
class MotorInertias:
    """Rotor inertias of the velocity-input and force-input motors (kg m^2)."""

    i_mv: float = 0.0
    i_mf: float = 0.0

    def __post_init__(self):
        if self.i_mv < 0.0 or self.i_mf < 0.0:
            raise ValueError("motor rotor inertias must be nonnegative")


@dataclass(frozen=True)
class ReflectedInertia2x2:
    """Symmetric 2x2 apparent-inertia matrix in the input space (kg m^2)."""

    a_vv: float
    a_vf: float
    a_fv: float
    a_ff: float

    @property
    def mu(self) -> float:
        """Dynamic coupling term: the off-diagonal entry."""
        return self.a_vf

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.a_vv, self.a_vf], [self.a_fv, self.a_ff]])


def _check(rho: float, i_joint: float) -> None:
    if rho == -1.0:
        raise SingularParameterError("rho = -1 makes the velocity ratios undefined")
    if i_joint < 0.0:
        raise ValueError("joint inertia must be nonnegative")


def reflected_inertia(
    rho: float, i_joint: float, m: MotorInertias = MotorInertias()
) -> ReflectedInertia2x2:
    """Apparent inertia matrix at the inputs for joint inertia i_joint."""
    _check(rho, i_joint)
    d = (rho + 1.0) ** 2
    off = i_joint * rho / d
    return ReflectedInertia2x2(
        a_vv=m.i_mv + i_joint / d,
        a_vf=off,
        a_fv=off,
        a_ff=m.i_mf + i_joint * rho * rho / d,
    )


def coupling_mu(rho: float, i_joint: float) -> float:
    """Dynamic coupling term mu = i_joint * rho / (rho + 1)^2."""
    _check(rho, i_joint)
    return i_joint * rho / (rho + 1.0) ** 2


def coupling_sensitivity(rho: float, i_joint: float) -> float:
    """d(mu)/d(rho) = i_joint * (1 - rho) / (rho + 1)^3."""
    _check(rho, i_joint)
    return i_joint * (1.0 - rho) / (rho + 1.0) ** 3


def limit_reflected_inertia(
    i_joint: float, m: MotorInertias = MotorInertias()
) -> ReflectedInertia2x2:
    """rho -> infinity limit: diag(i_mv, i_mf + i_joint), zero coupling."""
    if i_joint < 0.0:
        raise ValueError("joint inertia must be nonnegative")
    return ReflectedInertia2x2(
        a_vv=m.i_mv, a_vf=0.0, a_fv=0.0, a_ff=m.i_mf + i_joint
    )


def mu_curve(
    rho_min: float,
    rho_max: float,
    n_samples: int,
    i_joint: float = 1.0,
    log_spaced: bool = False,
) -> np.ndarray:
    """Tabulate (rho, mu, dmu/drho) over [rho_min, rho_max].

    Returns an (n_samples, 3) array. log_spaced requires a positive range
    and places samples uniformly in log10(rho). The interval must not
    contain the pole at rho = -1.
    """
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    if not rho_min < rho_max:
        raise ValueError("rho_min must be less than rho_max")
    if rho_min <= -1.0 <= rho_max:
        raise SingularParameterError("rho interval contains the pole at -1")
    if log_spaced:
        if rho_min <= 0.0:
            raise ValueError("log spacing requires rho_min > 0")
        rhos = 10.0 ** np.linspace(np.log10(rho_min), np.log10(rho_max), n_samples)
    else:
        rhos = np.linspace(rho_min, rho_max, n_samples)
    d = (rhos + 1.0) ** 2
    mu = i_joint * rhos / d
    dmu = i_joint * (1.0 - rhos) / (d * (rhos + 1.0))
    return np.column_stack([rhos, mu, dmu])
