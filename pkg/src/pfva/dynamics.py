"""Allocation of joint motion to the two inputs and inertial torque demands.

The transmission is redundant (two inputs, one output), so the joint
acceleration must be shared between the inputs by an explicit policy before
inverse dynamics can be evaluated. Only inertial torques are modeled;
gravity, centripetal/Coriolis, and static loads are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .coupling import MotorInertias, reflected_inertia
from .errors import AllocationError
from .gear_train import GearReductions
from .mechanism import JointState


class AllocationPolicy(Enum):
    """How the joint motion is split between the two inputs."""

    VELOCITY_ONLY = "velocity_only"
    FORCE_ONLY = "force_only"
    MIN_NORM = "min_norm"


@dataclass(frozen=True)
class InputMotion:
    """Input-shaft velocities and accelerations consistent with Eq. 9."""

    phi_v_dot: float
    phi_f_dot: float
    phi_v_ddot: float
    phi_f_ddot: float


@dataclass(frozen=True)
class InertialTorques:
    """Per-input inertia torque demands and their cross-coupling parts.

    coupling_on_v = mu * phi_f_ddot is the load the force input's
    acceleration puts on the velocity input, and vice versa.
    """

    tau_v_inertial: float
    tau_f_inertial: float
    coupling_on_v: float
    coupling_on_f: float


def allocate(
    joint: JointState, g: GearReductions, policy: AllocationPolicy
) -> InputMotion:
    """Split theta_dot / theta_ddot between the inputs under the policy.

    All policies satisfy r_v*phi_v_dot + r_f*phi_f_dot = theta_dot (and the
    acceleration analog); min_norm is the least-squares pseudoinverse split.
    """
    if policy is AllocationPolicy.VELOCITY_ONLY:
        if g.r_v == 0.0:
            raise AllocationError("velocity_only needs a nonzero r_v")
        return InputMotion(joint.theta_dot / g.r_v, 0.0, joint.theta_ddot / g.r_v, 0.0)
    if policy is AllocationPolicy.FORCE_ONLY:
        if g.r_f == 0.0:
            raise AllocationError("force_only needs a nonzero r_f")
        return InputMotion(0.0, joint.theta_dot / g.r_f, 0.0, joint.theta_ddot / g.r_f)
    denom = g.r_v * g.r_v + g.r_f * g.r_f
    return InputMotion(
        g.r_v * joint.theta_dot / denom,
        g.r_f * joint.theta_dot / denom,
        g.r_v * joint.theta_ddot / denom,
        g.r_f * joint.theta_ddot / denom,
    )


def inertial_torques(
    motion: InputMotion,
    rho: float,
    i_joint: float,
    m: MotorInertias = MotorInertias(),
) -> InertialTorques:
    """Inverse-dynamics torque demand at each input for the given motion."""
    a = reflected_inertia(rho, i_joint, m)
    c_on_v = a.mu * motion.phi_f_ddot
    c_on_f = a.mu * motion.phi_v_ddot
    return InertialTorques(
        tau_v_inertial=a.a_vv * motion.phi_v_ddot + c_on_v,
        tau_f_inertial=a.a_ff * motion.phi_f_ddot + c_on_f,
        coupling_on_v=c_on_v,
        coupling_on_f=c_on_f,
    )


def limit_inertial_torques(
    motion: InputMotion,
    i_joint: float,
    m: MotorInertias = MotorInertias(),
) -> InertialTorques:
    """rho -> infinity torque demands: fully decoupled inputs."""
    return InertialTorques(
        tau_v_inertial=m.i_mv * motion.phi_v_ddot,
        tau_f_inertial=(m.i_mf + i_joint) * motion.phi_f_ddot,
        coupling_on_v=0.0,
        coupling_on_f=0.0,
    )
