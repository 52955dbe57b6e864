"""
Success classification for pose pairs
=====================================

A placement counts as a translational success when the object center
lands within W/2 of the target center, and as a rotational success when
every axis is within omega degrees after reducing by the cube's 90
degree symmetry. Combined success needs both.
"""

from fitts3d import (Pose, classify_combined, classify_rotation,
                     classify_translation, symmetry_reduced_delta_deg)

W = 5.0
omega = 2.5

target = Pose((10.0, 0.0, 0.0), (0.0, 0.0, 0.0))

cases = [
    ("dead center", Pose((10.0, 0.0, 0.0), (0.0, 0.0, 0.0))),
    ("2 cm off", Pose((12.0, 0.0, 0.0), (0.0, 0.0, 0.0))),
    ("on the W/2 boundary", Pose((12.5, 0.0, 0.0), (0.0, 0.0, 0.0))),
    ("3 cm off", Pose((13.0, 0.0, 0.0), (1.0, 0.0, 0.0))),
    ("tilted 2 deg", Pose((10.0, 0.0, 0.0), (2.0, 0.0, 0.0))),
    ("tilted 4 deg", Pose((10.0, 0.0, 0.0), (4.0, 0.0, 0.0))),
    # 89 degrees is only 1 degree away from the quarter-turn twin
    ("tilted 89 deg", Pose((10.0, 0.0, 0.0), (89.0, 0.0, 0.0))),
    ("quarter turn", Pose((10.0, 0.0, 0.0), (90.0, 0.0, 0.0))),
    ("half turn, flipped", Pose((10.0, 0.0, 0.0), (180.0, 270.0, 90.0))),
]

print(f"W = {W} cm, omega = {omega} deg")
print(f"{'case':22s} {'trans':>5} {'rot':>5} {'both':>5}")
for label, obj in cases:
    t = classify_translation(obj, target, W)
    r = classify_rotation(obj, target, omega)
    c = classify_combined(obj, target, W, omega)
    print(f"{label:22s} {str(t):>5} {str(r):>5} {str(c):>5}")

print()
print("symmetry-reduced residuals for a few raw angle differences:")
for raw in (0.0, 44.0, 46.0, 89.0, 90.0, 135.0, 180.0):
    print(f"  {raw:6.1f} deg -> {symmetry_reduced_delta_deg(raw):6.1f} deg")
