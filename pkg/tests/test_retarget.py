import math
import random

import pytest

from fitts3d import (BonePair, DegenerateBone, JointState, Pose, joint_angle,
                     palm_velocity_command, pd_torque)


def test_joint_angle_parallel_is_zero():
    assert joint_angle(BonePair((1, 0, 0), (1, 0, 0))) == 0.0
    assert joint_angle(BonePair((2, 0, 0), (5, 0, 0))) == 0.0


def test_joint_angle_orthogonal():
    assert joint_angle(BonePair((1, 0, 0), (0, 1, 0))) == pytest.approx(
        math.pi / 2, abs=1e-12)
    assert joint_angle(BonePair((0, 0, 3), (0, 2, 0))) == pytest.approx(
        math.pi / 2, abs=1e-12)


def test_joint_angle_oblique():
    assert joint_angle(BonePair((1, 1, 0), (1, 0, 0))) == pytest.approx(
        math.pi / 4, abs=1e-12)
    assert joint_angle(BonePair((-1, 0, 0), (1, 0, 0))) == pytest.approx(
        math.pi, abs=1e-12)


def test_joint_angle_clamps_rounding():
    # nearly parallel unit vectors can push the raw cosine past 1.0;
    # the clamp keeps arccos defined
    a = (0.7071067811865476, 0.7071067811865475, 0.0)
    angle = joint_angle(BonePair(a, a))
    assert angle == 0.0


def test_joint_angle_scale_invariance():
    rng = random.Random(11)
    for _ in range(500):
        bone = tuple(rng.uniform(-1, 1) for _ in range(3))
        parent = tuple(rng.uniform(-1, 1) for _ in range(3))
        if math.dist(bone, (0, 0, 0)) < 1e-3 or math.dist(parent, (0, 0, 0)) < 1e-3:
            continue
        base = joint_angle(BonePair(bone, parent))
        s, t = rng.uniform(0.1, 50), rng.uniform(0.1, 50)
        scaled = joint_angle(BonePair(tuple(s * v for v in bone),
                                      tuple(t * v for v in parent)))
        assert scaled == pytest.approx(base, abs=1e-9)
        assert 0.0 <= base <= math.pi


def test_joint_angle_degenerate():
    with pytest.raises(DegenerateBone):
        joint_angle(BonePair((0, 0, 0), (1, 0, 0)))
    with pytest.raises(DegenerateBone):
        joint_angle(BonePair((1, 0, 0), (0, 1e-13, 0)))


def test_bone_pair_validation():
    with pytest.raises(ValueError):
        BonePair((1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        BonePair((1, 0, 0), (math.nan, 0, 0))


def test_joint_state_validation():
    with pytest.raises(ValueError):
        JointState(kp=-1.0, kd=0.0, theta_desired=0, theta_current=0, theta_dot=0)
    with pytest.raises(ValueError):
        JointState(kp=1.0, kd=-0.5, theta_desired=0, theta_current=0, theta_dot=0)
    with pytest.raises(ValueError):
        JointState(kp=1.0, kd=0.0, theta_desired=math.inf,
                   theta_current=0, theta_dot=0)


def test_pd_torque_identities():
    zero = JointState(kp=10.0, kd=2.0, theta_desired=0.5,
                      theta_current=0.5, theta_dot=0.0)
    assert pd_torque(zero) == 0.0
    pure_p = JointState(kp=10.0, kd=2.0, theta_desired=1.0,
                        theta_current=0.5, theta_dot=0.0)
    assert pd_torque(pure_p) == 5.0
    damped = JointState(kp=0.0, kd=2.0, theta_desired=1.0,
                        theta_current=0.5, theta_dot=1.0)
    assert pd_torque(damped) == -2.0


def test_pd_torque_linearity():
    rng = random.Random(3)
    for _ in range(200):
        kp, kd = rng.uniform(0, 20), rng.uniform(0, 5)
        des, cur, vel = (rng.uniform(-2, 2) for _ in range(3))
        tau = pd_torque(JointState(kp, kd, des, cur, vel))
        assert tau == pytest.approx(kp * (des - cur) - kd * vel, abs=1e-12)
        # doubling both gains doubles the torque
        tau2 = pd_torque(JointState(2 * kp, 2 * kd, des, cur, vel))
        assert tau2 == pytest.approx(2 * tau, abs=1e-9)


def test_palm_zero_error_is_zero_command():
    pose = Pose((3.0, -1.0, 2.0), (10.0, 20.0, 30.0))
    assert palm_velocity_command(pose, pose, 2.0, 50.0) == (0.0,) * 6


def test_palm_proportional_components():
    current = Pose((0.0, 0.0, 0.0), (0.0, 0.0, 0.0))
    target = Pose((3.0, -2.0, 1.0), (4.0, 0.0, -6.0))
    cmd = palm_velocity_command(current, target, 2.0, 100.0)
    assert cmd == (6.0, -4.0, 2.0, 8.0, 0.0, -12.0)


def test_palm_saturation():
    current = Pose((0.0, 0.0, 0.0))
    target = Pose((100.0, -100.0, 0.5))
    cmd = palm_velocity_command(current, target, 3.0, 20.0)
    assert cmd[:3] == (20.0, -20.0, 1.5)
    assert cmd[3:] == (0.0, 0.0, 0.0)


def test_palm_angular_shortest_path():
    # 170 -> -170 is 20 degrees forward, not 340 back
    current = Pose((0, 0, 0), (170.0, 0.0, 0.0))
    target = Pose((0, 0, 0), (190.0, 0.0, 0.0))
    cmd = palm_velocity_command(current, target, 1.0, 500.0)
    assert cmd[3] == pytest.approx(20.0, abs=1e-9)
    back = palm_velocity_command(Pose((0, 0, 0), (10.0, 0, 0)),
                                 Pose((0, 0, 0), (350.0, 0, 0)), 1.0, 500.0)
    assert back[3] == pytest.approx(-20.0, abs=1e-9)


def test_palm_command_antisymmetry():
    rng = random.Random(9)
    for _ in range(200):
        a = Pose(tuple(rng.uniform(-40, 40) for _ in range(3)),
                 tuple(rng.uniform(0, 360) for _ in range(3)))
        b = Pose(tuple(rng.uniform(-40, 40) for _ in range(3)),
                 tuple(rng.uniform(0, 360) for _ in range(3)))
        fwd = palm_velocity_command(a, b, 1.0, 1e9)
        rev = palm_velocity_command(b, a, 1.0, 1e9)
        for f, r in zip(fwd[:3], rev[:3]):
            assert f == pytest.approx(-r, abs=1e-9)
        for f, r in zip(fwd[3:], rev[3:]):
            # antisymmetric except at the 180-degree branch point
            if abs(abs(f) - 180.0) > 1e-6:
                assert f == pytest.approx(-r, abs=1e-9)
        assert all(abs(v) <= 1e9 for v in fwd)


def test_palm_parameter_validation():
    pose = Pose((0, 0, 0))
    with pytest.raises(ValueError):
        palm_velocity_command(pose, pose, 0.0, 10.0)
    with pytest.raises(ValueError):
        palm_velocity_command(pose, pose, -1.0, 10.0)
    with pytest.raises(ValueError):
        palm_velocity_command(pose, pose, 1.0, 0.0)
    with pytest.raises(ValueError):
        palm_velocity_command(pose, pose, math.nan, 10.0)
