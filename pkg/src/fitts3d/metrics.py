"""Indices of difficulty for seven movement-time models and the
per-model predictor vectors used by the regression layer.

Translational forms (A, W, F in cm):

    Fitts        ID = log2(2A / W)
    Hoffmann     ID = log2(2A / (W + F))
    Welford      ID = log2(A / W + 0.5)
    Shannon      ID = log2(A / W + 1)
    final model  ID_t = log2(2A / (F + W) + 1)

Rotational adaptations substitute the rotation amplitude alpha for A
and the angular tolerance omega for W (both degrees):

    Fitts / Hoffmann / Cha-Myung   log2(2 alpha / omega)
    Welford                        log2(alpha / omega + 0.5)
    Shannon / Murata-Iwase         log2(alpha / omega + 1)
    final model                    ID_r = log2(2 alpha / omega^2 + 1)

Hoffmann's finger span F has no rotational analogue and is dropped from
its adapted form. Negative indices (possible when the tolerance exceeds
the amplitude) are returned as-is, never clamped.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .tasks import TaskSpec

TRANSLATION = "translation"
ROTATION = "rotation"
COMBINED = "combined"


class ModelKind(Enum):
    """The seven candidate models, in canonical declaration order."""

    FITTS = "fitts"
    HOFFMANN = "hoffmann"
    WELFORD = "welford"
    SHANNON = "shannon"
    MURATA_IWASE = "murata-iwase"
    CHA_MYUNG = "cha-myung"
    FINAL = "final"


MODEL_ORDER = tuple(ModelKind)

_PREDICTOR_LAYOUT = {
    ModelKind.FITTS: ("id",),
    ModelKind.HOFFMANN: ("id",),
    ModelKind.WELFORD: ("id",),
    ModelKind.SHANNON: ("id",),
    ModelKind.MURATA_IWASE: ("id_shannon", "sin_phi"),
    ModelKind.CHA_MYUNG: ("theta1", "sin_theta2", "id_hoffmann"),
    ModelKind.FINAL: ("id_t", "id_r"),
}


def declaration_index(kind: ModelKind) -> int:
    return MODEL_ORDER.index(kind)


def predictor_names(kind: ModelKind) -> tuple[str, ...]:
    """Names of the regressors the model fits (intercept excluded)."""
    return _PREDICTOR_LAYOUT[ModelKind(kind)]


@dataclass(frozen=True)
class IdValue:
    """A difficulty index in bits, tagged with the motion regime it
    describes."""

    bits: float
    kind: str

    def __post_init__(self):
        if self.kind not in (TRANSLATION, ROTATION, COMBINED):
            raise ValueError(f"unknown regime {self.kind!r}")
        if not math.isfinite(self.bits):
            raise DomainError("difficulty index is not finite")


@dataclass(frozen=True)
class PredictorVector:
    """Named regressor values for one task condition."""

    names: tuple[str, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ValueError("names and values differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("predictor names must be unique")
        if not all(math.isfinite(v) for v in self.values):
            raise DomainError("predictor values must be finite")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.names, self.values))


def _log2_checked(x: float, what: str) -> float:
    if x <= 0:
        raise DomainError(f"{what} requires a positive log argument, got {x}")
    return math.log2(x)


def _sin_deg(angle: float) -> float:
    return math.sin(math.radians(angle))


def id_fitts(A: float, W: float) -> IdValue:
    """log2(2A / W). Requires A > 0 and W > 0; negative when A < W/2."""
    if A <= 0 or W <= 0:
        raise DomainError("id_fitts needs A > 0 and W > 0")
    return IdValue(_log2_checked(2.0 * A / W, "id_fitts"), TRANSLATION)


def id_hoffmann(A: float, W: float, F: float) -> IdValue:
    """log2(2A / (W + F)). Requires A > 0 and W + F > 0."""
    if A <= 0 or W + F <= 0:
        raise DomainError("id_hoffmann needs A > 0 and W + F > 0")
    return IdValue(_log2_checked(2.0 * A / (W + F), "id_hoffmann"), TRANSLATION)


def id_welford(A: float, W: float) -> IdValue:
    """log2(A / W + 0.5). Requires A >= 0 and W > 0."""
    if A < 0 or W <= 0:
        raise DomainError("id_welford needs A >= 0 and W > 0")
    return IdValue(math.log2(A / W + 0.5), TRANSLATION)


def id_shannon(A: float, W: float) -> IdValue:
    """log2(A / W + 1). Requires A >= 0 and W > 0; zero at A = 0."""
    if A < 0 or W <= 0:
        raise DomainError("id_shannon needs A >= 0 and W > 0")
    return IdValue(math.log2(A / W + 1.0), TRANSLATION)


def id_t_final(A: float, W: float, F: float) -> IdValue:
    """log2(2A / (F + W) + 1). Requires A >= 0 and W + F > 0.

    Pointwise equal to the Shannon form evaluated at distance 2A and
    width W + F.
    """
    if A < 0 or W + F <= 0:
        raise DomainError("id_t_final needs A >= 0 and W + F > 0")
    return IdValue(math.log2(2.0 * A / (F + W) + 1.0), TRANSLATION)


def id_r_final(alpha: float, omega: float) -> IdValue:
    """log2(2 alpha / omega^2 + 1), angles in degrees.

    Requires alpha >= 0 and omega > 0; zero at alpha = 0. The squared
    tolerance makes the index tolerance-dominated: halving omega adds
    roughly two bits once 2 alpha / omega^2 is large.
    """
    if alpha < 0 or omega <= 0:
        raise DomainError("id_r_final needs alpha >= 0 and omega > 0")
    return IdValue(math.log2(2.0 * alpha / (omega * omega) + 1.0), ROTATION)


def id_rot_adapted(kind: ModelKind, alpha: float, omega: float) -> IdValue:
    """Rotational difficulty under a prior model's adapted form
    (amplitude alpha for distance, tolerance omega for width)."""
    kind = ModelKind(kind)
    if kind is ModelKind.FINAL:
        return id_r_final(alpha, omega)
    if omega <= 0 or alpha < 0:
        raise DomainError("adapted rotational ID needs alpha >= 0 and omega > 0")
    if kind in (ModelKind.FITTS, ModelKind.HOFFMANN, ModelKind.CHA_MYUNG):
        if alpha <= 0:
            raise DomainError(f"{kind.value} adapted form needs alpha > 0")
        bits = _log2_checked(2.0 * alpha / omega, f"{kind.value} adapted form")
    elif kind is ModelKind.WELFORD:
        bits = math.log2(alpha / omega + 0.5)
    else:  # Shannon, Murata-Iwase
        bits = math.log2(alpha / omega + 1.0)
    return IdValue(bits, ROTATION)


def predictors_murata(A: float, W: float, phi: float) -> PredictorVector:
    """Murata-Iwase regressors for a translational task: the Shannon
    index plus the sine of the direction angle."""
    return PredictorVector(("id_shannon", "sin_phi"),
                           (id_shannon(A, W).bits, _sin_deg(phi)))


def predictors_cha_myung(A: float, W: float, F: float,
                         theta1: float, theta2: float) -> PredictorVector:
    """Cha-Myung regressors: inclination angle in raw degrees, sine of
    the direction angle, and the Hoffmann index."""
    return PredictorVector(("theta1", "sin_theta2", "id_hoffmann"),
                           (float(theta1), _sin_deg(theta2),
                            id_hoffmann(A, W, F).bits))


def task_regime(task: TaskSpec) -> str:
    """Which motion regime a condition exercises.

    No rotation requirement -> translation (even at A = 0); rotation
    with A = 0 -> rotation; otherwise combined.
    """
    if task.alpha == 0 and task.omega == 0:
        return TRANSLATION
    if task.A == 0:
        return ROTATION
    return COMBINED


def _translation_bits(kind: ModelKind, task: TaskSpec) -> float:
    if kind is ModelKind.FITTS:
        return id_fitts(task.A, task.W).bits
    if kind in (ModelKind.HOFFMANN, ModelKind.CHA_MYUNG):
        return id_hoffmann(task.A, task.W, task.F).bits
    if kind is ModelKind.WELFORD:
        return id_welford(task.A, task.W).bits
    # Shannon and Murata-Iwase share the Shannon form
    return id_shannon(task.A, task.W).bits


def _single_id_bits(kind: ModelKind, task: TaskSpec) -> float:
    """The (possibly summed) difficulty a prior model assigns a task:
    translation ID, adapted rotation ID, or their sum on combined
    tasks."""
    regime = task_regime(task)
    if regime == TRANSLATION:
        return _translation_bits(kind, task)
    if regime == ROTATION:
        return id_rot_adapted(kind, task.alpha, task.omega).bits
    return (_translation_bits(kind, task)
            + id_rot_adapted(kind, task.alpha, task.omega).bits)


def predictors_for(kind: ModelKind, task: TaskSpec) -> PredictorVector:
    """Regressor vector a model uses for one task condition.

    Raises DomainError when the model cannot express the condition,
    e.g. Fitts on a purely translational task with A = 0.
    """
    kind = ModelKind(kind)
    if kind in (ModelKind.FITTS, ModelKind.HOFFMANN,
                ModelKind.WELFORD, ModelKind.SHANNON):
        return PredictorVector(("id",), (_single_id_bits(kind, task),))
    if kind is ModelKind.MURATA_IWASE:
        regime = task_regime(task)
        if regime == TRANSLATION:
            bits = id_shannon(task.A, task.W).bits
        elif regime == ROTATION:
            bits = id_rot_adapted(kind, task.alpha, task.omega).bits
        else:
            bits = (id_shannon(task.A, task.W).bits
                    + id_rot_adapted(kind, task.alpha, task.omega).bits)
        return PredictorVector(("id_shannon", "sin_phi"),
                               (bits, _sin_deg(task.phi)))
    if kind is ModelKind.CHA_MYUNG:
        return PredictorVector(("theta1", "sin_theta2", "id_hoffmann"),
                               (task.theta, _sin_deg(task.phi),
                                _single_id_bits(kind, task)))
    # final model: separate translational and rotational indices
    idt = id_t_final(task.A, task.W, task.F).bits
    if task_regime(task) == TRANSLATION:
        idr = 0.0
    else:
        idr = id_r_final(task.alpha, task.omega).bits
    return PredictorVector(("id_t", "id_r"), (idt, idr))
