"""Retargeting of tracked hand and palm state onto an articulated
gripper: joint angles from bone directions, PD torques for the fingers
and a saturated proportional velocity command for the palm.
"""

import math
from dataclasses import dataclass

from .errors import DegenerateBone
from .tasks import Pose, wrap_angle_deg

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class BonePair:
    """Direction vectors of a bone and its parent, any length units."""

    bone: tuple[float, float, float]
    parent_bone: tuple[float, float, float]

    def __post_init__(self):
        bone = tuple(float(v) for v in self.bone)
        parent = tuple(float(v) for v in self.parent_bone)
        if len(bone) != 3 or len(parent) != 3:
            raise ValueError("bone vectors need 3 components")
        if not all(math.isfinite(v) for v in bone + parent):
            raise ValueError("bone vectors must be finite")
        object.__setattr__(self, "bone", bone)
        object.__setattr__(self, "parent_bone", parent)


def joint_angle(pair: BonePair) -> float:
    """Bend angle in radians between a bone and its parent.

    arccos of the normalised dot product, with the cosine clamped to
    [-1, 1] so parallel vectors cannot produce NaN through rounding.
    Raises DegenerateBone when either vector is (near-)zero.
    """
    bx, by, bz = pair.bone
    px, py, pz = pair.parent_bone
    nb = math.sqrt(bx * bx + by * by + bz * bz)
    np_ = math.sqrt(px * px + py * py + pz * pz)
    if nb <= _NORM_TOL or np_ <= _NORM_TOL:
        raise DegenerateBone("bone direction has near-zero length")
    cosine = (bx * px + by * py + bz * pz) / (nb * np_)
    cosine = min(1.0, max(-1.0, cosine))
    return math.acos(cosine)


@dataclass(frozen=True)
class JointState:
    """One finger joint: PD gains plus desired / current angle (radians)
    and the current angular velocity (radians per second)."""

    kp: float
    kd: float
    theta_desired: float
    theta_current: float
    theta_dot: float

    def __post_init__(self):
        for name in ("kp", "kd", "theta_desired", "theta_current", "theta_dot"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if self.kp < 0 or self.kd < 0:
            raise ValueError("gains must be nonnegative")


def pd_torque(state: JointState) -> float:
    """PD control law: kp * (desired - current) - kd * velocity."""
    return (state.kp * (state.theta_desired - state.theta_current)
            - state.kd * state.theta_dot)


def palm_velocity_command(current: Pose, target: Pose, gain: float,
                          max_speed: float):
    """Proportional 6-DoF velocity command driving the palm toward a
    target pose.

    Returns (vx, vy, vz, wx, wy, wz): linear components in cm/s and
    angular components in deg/s, each equal to gain times the pose
    error on that axis and saturated componentwise at max_speed.
    Angular errors take the shortest signed way around, in
    (-180, 180].
    """
    if not math.isfinite(gain) or gain <= 0:
        raise ValueError("gain must be positive")
    if not math.isfinite(max_speed) or max_speed <= 0:
        raise ValueError("max_speed must be positive")

    def clamp(v):
        return min(max_speed, max(-max_speed, v))

    linear = [clamp(gain * (t - c))
              for c, t in zip(current.position, target.position)]
    angular = [clamp(gain * wrap_angle_deg(t - c))
               for c, t in zip(current.rotation, target.rotation)]
    return tuple(linear + angular)
