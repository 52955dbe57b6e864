"""Task domain model: trial conditions, poses, target geometry and the
binary success classifiers.

Conventions used throughout the package:

* lengths in centimetres, angles in degrees, times in seconds;
* the coordinate frame is right-handed with the first axis pointing
  forward (viewing direction), the second axis up and the third axis to
  the right;
* object rotations are stored per axis in degrees, wrapped to
  (-180, 180].
"""

import math
from dataclasses import dataclass
from enum import Enum

POINTING_TIMEOUT_S = 15.0
MANIPULATION_TIMEOUT_S = 20.0

MIN_MT_S = 0.05

# A cube looks identical under quarter turns about each of its axes, so
# rotational error is only meaningful modulo 90 degrees per axis.
ROTATION_SYMMETRY_DEG = 90.0


class InteractionKind(str, Enum):
    POINTING = "pointing"
    MANIPULATION = "manipulation"

    @property
    def timeout_s(self) -> float:
        if self is InteractionKind.POINTING:
            return POINTING_TIMEOUT_S
        return MANIPULATION_TIMEOUT_S


class DistanceVariant(Enum):
    """How the separation between object and target was measured."""

    CENTER_CENTER = "center-center"
    EDGE_CENTER = "edge-center"
    EDGE_EDGE = "edge-edge"


def wrap_angle_deg(angle: float) -> float:
    """Wrap an angle in degrees to the half-open interval (-180, 180]."""
    r = math.fmod(angle, 360.0)
    if r <= -180.0:
        r += 360.0
    elif r > 180.0:
        r -= 360.0
    return r


def symmetry_reduced_delta_deg(delta: float) -> float:
    """Reduce an angular difference modulo the quarter-turn symmetry of a
    cube to the interval [-45, 45].

    Any of the four rotations that leave a cube looking the same counts
    as aligned, so only the residual within +-45 degrees matters.
    """
    r = math.fmod(delta, ROTATION_SYMMETRY_DEG)
    if r > 45.0:
        r -= ROTATION_SYMMETRY_DEG
    elif r < -45.0:
        r += ROTATION_SYMMETRY_DEG
    return r


@dataclass(frozen=True)
class Pose:
    """Position (cm) and per-axis rotation (degrees) of a rigid object.

    Rotations are normalised to (-180, 180] on construction.
    """

    position: tuple[float, float, float]
    rotation: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        pos = tuple(float(v) for v in self.position)
        rot = tuple(wrap_angle_deg(float(v)) for v in self.rotation)
        if len(pos) != 3 or len(rot) != 3:
            raise ValueError("Pose needs 3 position and 3 rotation components")
        if not all(math.isfinite(v) for v in pos + rot):
            raise ValueError("Pose components must be finite")
        object.__setattr__(self, "position", pos)
        object.__setattr__(self, "rotation", rot)


@dataclass(frozen=True)
class TaskSpec:
    """One experimental condition.

    F : cube side of the manipulated object, cm (> 0)
    W : cube side of the target, cm (> 0)
    A : centre-to-centre target distance, cm (>= 0)
    phi : direction angle in the horizontal plane, degrees in [0, 360)
    theta : inclination angle above the horizontal plane, degrees in [0, 90]
    alpha : required rotation about each axis, degrees (>= 0)
    omega : rotational tolerance per axis, degrees (>= 0)
    """

    F: float
    W: float
    A: float
    phi: float = 0.0
    theta: float = 0.0
    alpha: float = 0.0
    omega: float = 0.0
    interaction: InteractionKind = InteractionKind.POINTING

    def __post_init__(self):
        for name in ("F", "W", "A", "phi", "theta", "alpha", "omega"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if self.F <= 0 or self.W <= 0:
            raise ValueError("F and W must be positive")
        if self.A < 0 or self.alpha < 0 or self.omega < 0:
            raise ValueError("A, alpha and omega must be nonnegative")
        if not 0.0 <= self.phi < 360.0:
            raise ValueError("phi must lie in [0, 360)")
        if not 0.0 <= self.theta <= 90.0:
            raise ValueError("theta must lie in [0, 90]")
        object.__setattr__(self, "interaction", InteractionKind(self.interaction))


@dataclass(frozen=True)
class Trial:
    """One observed movement: the condition, the time and the outcome.

    Successful trials always finish within the interaction timeout;
    error trials are recorded at the timeout by the synthesizer.
    """

    task: TaskSpec
    mt: float
    success: bool

    def __post_init__(self):
        mt = float(self.mt)
        if not math.isfinite(mt) or mt <= 0:
            raise ValueError("mt must be positive and finite")
        if self.success and mt > self.task.interaction.timeout_s:
            raise ValueError("successful trials cannot exceed the timeout")
        object.__setattr__(self, "mt", mt)
        object.__setattr__(self, "success", bool(self.success))


def spherical_to_cartesian(A: float, phi: float, theta: float):
    """Cartesian offset of a target placed at distance A, direction phi
    and inclination theta (both degrees).

    phi sweeps the horizontal plane from the forward axis toward the
    right axis; theta elevates toward the up axis.
    """
    if A < 0:
        raise ValueError("A must be nonnegative")
    pr = math.radians(phi)
    tr = math.radians(theta)
    ct = math.cos(tr)
    return (A * ct * math.cos(pr), A * math.sin(tr), A * ct * math.sin(pr))


def euclidean_distance(p, q) -> float:
    return math.dist(p, q)


def effective_separation(measured: float, variant: DistanceVariant,
                         W: float, F: float) -> float:
    """Convert a measured separation to the centre-to-centre distance A.

    Centre-to-centre logs need no correction; edge-to-centre logs add
    half the target width; edge-to-edge logs add half of both cubes.
    """
    if measured < 0:
        raise ValueError("measured separation must be nonnegative")
    if W <= 0 or F <= 0:
        raise ValueError("W and F must be positive")
    variant = DistanceVariant(variant)
    if variant is DistanceVariant.CENTER_CENTER:
        return measured
    if variant is DistanceVariant.EDGE_CENTER:
        return measured + W / 2.0
    return measured + (W + F) / 2.0


def classify_translation(obj: Pose, target: Pose, W: float) -> bool:
    """Positional success: the object centre lies within W/2 of the
    target centre (at least 50 percent overlap). Boundary counts."""
    if W <= 0:
        raise ValueError("W must be positive")
    return euclidean_distance(obj.position, target.position) <= W / 2.0


def classify_rotation(obj: Pose, target: Pose, omega: float) -> bool:
    """Rotational success: on every axis the symmetry-reduced angular
    difference is within omega. Boundary counts."""
    if omega < 0:
        raise ValueError("omega must be nonnegative")
    for o_i, t_i in zip(obj.rotation, target.rotation):
        if abs(symmetry_reduced_delta_deg(t_i - o_i)) > omega:
            return False
    return True


def classify_combined(obj: Pose, target: Pose, W: float, omega: float) -> bool:
    """Combined success: positional and rotational criteria both hold."""
    return classify_translation(obj, target, W) and classify_rotation(obj, target, omega)
