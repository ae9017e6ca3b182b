"""Velocity/torque algebra of the dual-input single-output epicyclic train.

The transmission sums two input velocities with complementary weights
(r_v + r_f = 1) and splits the output torque with the same weights. The
single design variable is the relative scale factor rho = r_f / r_v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SingularParameterError

# rho = 1 locks the whole train into a single rigid rotation; flagged,
# not rejected, because the algebra stays regular there.
RHO_UNITY_TOL = 1e-9


@dataclass(frozen=True)
class GearReductions:
    """Velocity-side and force-side reductions with their ratio rho.

    near_unity flags |rho - 1| < RHO_UNITY_TOL (rigid-rotation condition);
    it is advisory and does not affect any computation.
    """

    r_v: float
    r_f: float
    rho: float
    near_unity: bool = False


@dataclass(frozen=True)
class PfvaState:
    """One static operating point: input/output velocities and torques."""

    omega_v: float
    omega_f: float
    omega_o: float
    tau_v: float
    tau_f: float
    tau_o: float


def reductions_from_rho(rho: float) -> GearReductions:
    """Build the reduction pair from rho: r_v = 1/(rho+1), r_f = rho/(rho+1).

    r_f is computed as 1 - r_v so the pair sums to one exactly in floating
    point. Raises SingularParameterError at rho = -1.
    """
    if rho == -1.0:
        raise SingularParameterError("rho = -1 makes the gear reductions undefined")
    r_v = 1.0 / (rho + 1.0)
    r_f = 1.0 - r_v
    # nudge the smaller-magnitude member by the residual (exact via Sterbenz,
    # since r_v + r_f lands within a few ulps of 1) so the pair sums to 1
    # exactly in floating point
    for _ in range(10):
        err = (r_v + r_f) - 1.0
        if err == 0.0:
            break
        if abs(r_v) <= abs(r_f):
            r_v -= err
        else:
            r_f -= err
    return GearReductions(
        r_v=r_v,
        r_f=r_f,
        rho=rho,
        near_unity=abs(rho - 1.0) < RHO_UNITY_TOL,
    )


def rho_of(g: GearReductions) -> float:
    """Recover rho = r_f / r_v from a reduction pair."""
    return g.r_f / g.r_v


def output_velocity(omega_v: float, omega_f: float, g: GearReductions) -> float:
    """Output speed as the reduction-weighted sum of the two input speeds."""
    return g.r_v * omega_v + g.r_f * omega_f


def input_torques(tau_o: float, g: GearReductions) -> tuple[float, float]:
    """Split the output torque onto the two inputs: (r_v*tau_o, r_f*tau_o)."""
    return g.r_v * tau_o, g.r_f * tau_o


def coupled_state(
    omega_v: float, omega_f: float, tau_o: float, g: GearReductions
) -> PfvaState:
    """Assemble a consistent operating point from input speeds and load torque."""
    tau_v, tau_f = input_torques(tau_o, g)
    return PfvaState(
        omega_v=omega_v,
        omega_f=omega_f,
        omega_o=output_velocity(omega_v, omega_f, g),
        tau_v=tau_v,
        tau_f=tau_f,
        tau_o=tau_o,
    )


def power_residual(s: PfvaState) -> float:
    """Lossless power balance: tau_o*omega_o - tau_v*omega_v - tau_f*omega_f.

    Zero (to rounding) for any state built by coupled_state.
    """
    return s.tau_o * s.omega_o - s.tau_v * s.omega_v - s.tau_f * s.omega_f
