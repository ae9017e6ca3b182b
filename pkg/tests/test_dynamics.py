import numpy as np
import pytest

from pfva import (
    AllocationError,
    AllocationPolicy,
    InputMotion,
    JointState,
    MotorInertias,
    allocate,
    inertial_torques,
    limit_inertial_torques,
    reductions_from_rho,
    reflected_inertia,
)


def test_allocate_velocity_only():
    g = reductions_from_rho(5.0)
    m = allocate(JointState(1.0, 1.0, 0.0), g, AllocationPolicy.VELOCITY_ONLY)
    assert m.phi_v_dot == pytest.approx(6.0)
    assert m.phi_f_dot == 0.0


def test_allocate_force_only():
    g = reductions_from_rho(5.0)
    m = allocate(JointState(1.0, 1.0, 0.0), g, AllocationPolicy.FORCE_ONLY)
    assert m.phi_f_dot == pytest.approx(1.2)
    assert m.phi_v_dot == 0.0


def test_allocate_min_norm():
    g = reductions_from_rho(5.0)
    m = allocate(JointState(1.0, 1.0, 0.0), g, AllocationPolicy.MIN_NORM)
    assert m.phi_v_dot == pytest.approx(6.0 / 26.0)
    assert m.phi_f_dot == pytest.approx(30.0 / 26.0)


def test_allocate_min_norm_grid_optimality():
    # the feasible set is the line r_v*pv + r_f*pf = theta_dot; sweep it
    g = reductions_from_rho(5.0)
    m = allocate(JointState(1.0, 1.0, 0.0), g, AllocationPolicy.MIN_NORM)
    best = np.inf
    for pv in np.linspace(-5.0, 5.0, 20001):
        pf = (1.0 - g.r_v * pv) / g.r_f
        best = min(best, pv * pv + pf * pf)
    assert m.phi_v_dot**2 + m.phi_f_dot**2 <= best + 1e-7


def test_allocate_degenerate_policy():
    g = reductions_from_rho(0.0)  # r_f = 0
    with pytest.raises(AllocationError):
        allocate(JointState(1.0, 1.0, 0.0), g, AllocationPolicy.FORCE_ONLY)


def test_inertial_torques_one_sided_coupling():
    motion = InputMotion(0.0, 0.0, 2.0, 0.0)
    tq = inertial_torques(motion, 5.0, 1.0)
    mu = reflected_inertia(5.0, 1.0).mu
    assert tq.coupling_on_v == 0.0
    assert tq.coupling_on_f == pytest.approx(mu * 2.0)


def test_inertial_torques_zero_accelerations():
    tq = inertial_torques(InputMotion(1.0, 1.0, 0.0, 0.0), 3.0, 2.0)
    assert tq.tau_v_inertial == 0.0
    assert tq.tau_f_inertial == 0.0
    assert tq.coupling_on_v == 0.0
    assert tq.coupling_on_f == 0.0


def test_inertial_torques_large_rho_limit_values():
    m = MotorInertias(0.1, 0.2)
    tq = inertial_torques(InputMotion(0.0, 0.0, 1.0, 1.0), 1e8, 1.0, m)
    assert tq.tau_v_inertial == pytest.approx(0.1, abs=1e-6)
    assert tq.tau_f_inertial == pytest.approx(1.2, abs=1e-6)


def test_limit_inertial_torques_examples():
    tq = limit_inertial_torques(InputMotion(0.0, 0.0, 1.0, 0.0), 1.0)
    assert (tq.tau_v_inertial, tq.tau_f_inertial) == (0.0, 0.0)
    tq = limit_inertial_torques(InputMotion(0.0, 0.0, 0.0, 1.0), 1.0)
    assert (tq.tau_v_inertial, tq.tau_f_inertial) == (0.0, 1.0)


def test_limit_agrees_with_large_rho():
    rng = np.random.default_rng(30)
    m = MotorInertias(0.1, 0.2)
    for _ in range(100):
        motion = InputMotion(*rng.uniform(-2.0, 2.0, size=4))
        lim = limit_inertial_torques(motion, 1.0, m)
        far = inertial_torques(motion, 1e8, 1.0, m)
        assert far.tau_v_inertial == pytest.approx(lim.tau_v_inertial, abs=1e-6)
        assert far.tau_f_inertial == pytest.approx(lim.tau_f_inertial, abs=1e-6)


def test_property_torques_match_matrix_product():
    rng = np.random.default_rng(31)
    for _ in range(1000):
        rho = rng.uniform(-20.0, 20.0)
        if abs(rho + 1.0) < 1e-2:
            continue
        i = rng.uniform(0.0, 5.0)
        m = MotorInertias(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0))
        motion = InputMotion(*rng.uniform(-3.0, 3.0, size=4))
        tq = inertial_torques(motion, rho, i, m)
        ref = reflected_inertia(rho, i, m).as_matrix() @ [
            motion.phi_v_ddot, motion.phi_f_ddot,
        ]
        np.testing.assert_allclose(
            [tq.tau_v_inertial, tq.tau_f_inertial], ref, rtol=1e-12, atol=1e-12
        )


def test_property_allocation_feasibility():
    rng = np.random.default_rng(32)
    for _ in range(1000):
        rho = rng.uniform(0.1, 50.0)
        g = reductions_from_rho(rho)
        joint = JointState(1.0, rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        for policy in AllocationPolicy:
            m = allocate(joint, g, policy)
            v = g.r_v * m.phi_v_dot + g.r_f * m.phi_f_dot
            a = g.r_v * m.phi_v_ddot + g.r_f * m.phi_f_ddot
            assert v == pytest.approx(joint.theta_dot, rel=1e-12, abs=1e-12)
            assert a == pytest.approx(joint.theta_ddot, rel=1e-12, abs=1e-12)


def test_property_min_norm_optimality():
    rng = np.random.default_rng(33)
    for _ in range(1000):
        g = reductions_from_rho(rng.uniform(0.1, 50.0))
        joint = JointState(1.0, rng.uniform(-5.0, 5.0), 0.0)
        norms = {}
        for policy in AllocationPolicy:
            m = allocate(joint, g, policy)
            norms[policy] = np.hypot(m.phi_v_dot, m.phi_f_dot)
        assert norms[AllocationPolicy.MIN_NORM] <= norms[AllocationPolicy.VELOCITY_ONLY] + 1e-12
        assert norms[AllocationPolicy.MIN_NORM] <= norms[AllocationPolicy.FORCE_ONLY] + 1e-12


def test_property_limit_decoupling():
    rng = np.random.default_rng(34)
    worst = 0.0
    for _ in range(1000):
        acc = rng.normal(size=2)
        acc /= np.linalg.norm(acc)
        tq = inertial_torques(InputMotion(0.0, 0.0, *acc), 1e6, 1.0)
        worst = max(worst, abs(tq.coupling_on_v), abs(tq.coupling_on_f))
    assert worst < 1e-5
