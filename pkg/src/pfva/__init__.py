"""Parallel force/velocity actuator modeling: dual-input epicyclic gear
train algebra, input-space reflected inertia and its coupling term, and a
crank-slider simulation harness with trapezoidal motion plans."""

from .coupling import (
    MotorInertias,
    ReflectedInertia2x2,
    coupling_mu,
    coupling_sensitivity,
    limit_reflected_inertia,
    mu_curve,
    reflected_inertia,
)
from .dynamics import (
    AllocationPolicy,
    InertialTorques,
    InputMotion,
    allocate,
    inertial_torques,
    limit_inertial_torques,
)
from .errors import (
    AllocationError,
    ConfigError,
    DeadCenterError,
    PfvaError,
    SingularParameterError,
    StrokeError,
)
from .gear_train import (
    GearReductions,
    PfvaState,
    coupled_state,
    input_torques,
    output_velocity,
    power_residual,
    reductions_from_rho,
    rho_of,
)
from .harness import (
    ExperimentConfig,
    SimulationRecord,
    SweepRow,
    emit_csv,
    load_config,
    run_simulation,
    summarize,
    sweep_rho,
)
from .mechanism import (
    CrankSliderGeometry,
    JointState,
    MechanismMasses,
    effective_inertia,
    joint_from_slider,
    kic_first,
    kic_second,
    slider_position,
)
from .trajectory import (
    TrapezoidProfile,
    joint_trajectory,
    plan_trapezoid,
    sample,
)

__version__ = "0.1.0"
