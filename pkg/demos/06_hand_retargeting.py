"""
Hand-to-gripper retargeting primitives
======================================

Map tracked bone directions to joint bend angles, drive a finger joint
with a PD law, and steer the palm with a saturated proportional
velocity command.
"""

import math

from fitts3d import (BonePair, JointState, Pose, joint_angle,
                     palm_velocity_command, pd_torque)

# a curled index finger: each bone direction relative to its parent
bones = [
    ("proximal", BonePair((1.0, 0.0, 0.0), (1.0, 0.0, 0.0))),
    ("middle", BonePair((0.9, -0.4, 0.0), (1.0, 0.0, 0.0))),
    ("distal", BonePair((0.4, -0.9, 0.0), (0.9, -0.4, 0.0))),
]
print("bend angles along the finger chain:")
for name, pair in bones:
    print(f"  {name:9s} {math.degrees(joint_angle(pair)):6.1f} deg")

# PD torque toward the measured bend angle
print()
print("PD torques toward a 40 deg target bend:")
target = math.radians(40.0)
for current_deg, vel in ((0.0, 0.0), (20.0, 0.5), (40.0, 1.0), (60.0, 0.0)):
    state = JointState(kp=8.0, kd=1.5, theta_desired=target,
                       theta_current=math.radians(current_deg), theta_dot=vel)
    print(f"  at {current_deg:5.1f} deg, vel {vel:.1f} rad/s -> "
          f"torque {pd_torque(state):+7.3f}")

# palm command: proportional on each axis, clamped at max_speed,
# angular error via the shortest way around
print()
palm = Pose((0.0, 0.0, 0.0), (350.0, 0.0, 0.0))
goal = Pose((30.0, 5.0, 0.0), (10.0, 0.0, 0.0))
cmd = palm_velocity_command(palm, goal, gain=2.0, max_speed=25.0)
print("palm at 350 deg roll, goal at 10 deg, gain 2, max 25:")
print(f"  linear  {cmd[:3]} cm/s")
print(f"  angular {cmd[3:]} deg/s   (20 deg error, not -340)")
