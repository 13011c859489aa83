"""Four-stroke quantum Otto cycle run on the two-spin DM working substance.

Stages::

    <1> contact with the hot bath at Th, Hamiltonian (j1, d1): occupations -> p_i1
    <2> adiabatic change (j1, d1) -> (j2, d2), occupations frozen
    <3> contact with the cold bath at Tl, Hamiltonian (j2, d2): occupations -> p_i2
    <4> adiabatic change (j2, d2) -> (j1, d1), occupations frozen

Heat is positive when absorbed by the working substance; work ``w`` is the
net work delivered by the engine, ``w = q_h + q_l``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ConfigurationError, DomainError, RegimeError
from .spin_model import ModelParams, gibbs_occupations, spectrum

# |q_h|, |q_l|, |w| at or below this are reported as a trivial cycle.
ZERO_TOL = 1e-12
PROBABILITY_TOL = 1e-10


class CycleCase(enum.Enum):
    """Realized sign pattern of the heats over one cycle.

    Only ``ENGINE`` is ever observed for th > tl; the two other ``w > 0``
    patterns are kept so that a violation would be reported, not hidden.
    """

    ENGINE = "engine"  # q_h > -q_l > 0
    TRIVIAL = "trivial"  # q_h = q_l = w = 0
    NON_ENGINE = "non-engine"  # w <= 0
    COLD_DRIVEN = "cold-driven"  # q_l > -q_h > 0
    DOUBLE_ABSORPTION = "double-absorption"  # q_h > 0 and q_l > 0


@dataclass(frozen=True)
class CycleSpec:
    j1: float
    d1: float
    th: float
    j2: float
    d2: float
    tl: float

    def __post_init__(self):
        for name in ("j1", "d1", "th", "j2", "d2", "tl"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigurationError(f"{name} must be finite")
        if not self.th > self.tl:
            raise ConfigurationError("bath temperatures must satisfy Th > Tl")
        if not self.tl > 0:
            raise ConfigurationError("bath temperatures must be positive")
        if self.j1 == 0 or self.j2 == 0:
            raise ConfigurationError("couplings j1 and j2 must be nonzero")
        if (self.j1 > 0) != (self.j2 > 0):
            raise ConfigurationError(
                "couplings j1 and j2 must share a sign (mixed AFM/FM cycles are not supported)"
            )

    @property
    def hot(self) -> ModelParams:
        return ModelParams(self.j1, self.d1)

    @property
    def cold(self) -> ModelParams:
        return ModelParams(self.j2, self.d2)


@dataclass(frozen=True)
class CycleResult:
    """Heat, work and efficiency of one cycle.

    ``eta`` is set only for ``CycleCase.ENGINE``. ``work_ratio`` is the raw
    ``w / q_h`` for any cycle with ``q_h != 0`` and is a diagnostic, not an
    efficiency.
    """

    q_h: float
    q_l: float
    w: float
    eta: Optional[float]
    eta_carnot: float
    case: CycleCase
    work_ratio: Optional[float] = None


def classify_cycle(q_h: float, q_l: float, w: float, atol: float = ZERO_TOL) -> CycleCase:
    if max(abs(q_h), abs(q_l), abs(w)) <= atol:
        return CycleCase.TRIVIAL
    if w <= 0:
        return CycleCase.NON_ENGINE
    if q_h > -q_l > 0:
        return CycleCase.ENGINE
    if q_l > -q_h > 0:
        return CycleCase.COLD_DRIVEN
    return CycleCase.DOUBLE_ABSORPTION


def _check_normalized(p: np.ndarray, name: str) -> None:
    if np.any(p < -PROBABILITY_TOL) or abs(p.sum() - 1.0) > PROBABILITY_TOL:
        raise DomainError(f"{name} is not a normalized probability vector: {p.tolist()}")


def stroke_heat(
    energies: Sequence[float], p_before: Sequence[float], p_after: Sequence[float]
) -> float:
    """Heat absorbed on an isochoric stroke, ``sum_i E_i (p_after_i - p_before_i)``."""
    e = np.asarray(energies, dtype=float)
    pb = np.asarray(p_before, dtype=float)
    pa = np.asarray(p_after, dtype=float)
    _check_normalized(pb, "p_before")
    _check_normalized(pa, "p_after")
    return float(np.dot(e, pa - pb))


def stroke_work(
    probabilities: Sequence[float],
    energies_before: Sequence[float],
    energies_after: Sequence[float],
) -> float:
    """Work done ON the system by an adiabatic stroke, ``sum_i p_i (E'_i - E_i)``."""
    p = np.asarray(probabilities, dtype=float)
    _check_normalized(p, "probabilities")
    diff = np.asarray(energies_after, dtype=float) - np.asarray(energies_before, dtype=float)
    return float(np.dot(p, diff))


def cycle_heats(gap1, gap2, th, tl):
    """Closed-form ``(q_h, q_l, w)``; accepts scalars or broadcastable arrays.

    ``q_h = e1 (tanh(e2/2Tl) - tanh(e1/2Th))``, ``q_l = e2 (tanh(e1/2Th) - tanh(e2/2Tl))``
    and ``w = q_h + q_l``, with ``e_k`` the signed gaps.
    """
    t_hot = np.tanh(np.divide(gap1, 2.0 * np.asarray(th)))
    t_cold = np.tanh(np.divide(gap2, 2.0 * np.asarray(tl)))
    q_h = gap1 * (t_cold - t_hot)
    q_l = gap2 * (t_hot - t_cold)
    return q_h, q_l, q_h + q_l


def carnot_efficiency(th: float, tl: float) -> float:
    if not (th > 0 and tl > 0):
        raise DomainError("bath temperatures must be positive")
    if th < tl:
        raise DomainError("bath temperatures must satisfy Th >= Tl")
    return 1.0 - tl / th


def gap_efficiency(gap_hot: float, gap_cold: float) -> float:
    if gap_hot == 0:
        raise ZeroDivisionError("efficiency undefined for a zero hot-stage gap")
    return 1.0 - gap_cold / gap_hot


def efficiency(spec: CycleSpec) -> float:
    """Otto efficiency ``1 - e2/e1``; independent of the bath temperatures."""
    return gap_efficiency(spec.hot.gap, spec.cold.gap)


def make_result(q_h: float, q_l: float, w: float, eta_engine: float, th: float, tl: float):
    """Assemble a :class:`CycleResult`, keeping ``eta_engine`` only for engines."""
    case = classify_cycle(q_h, q_l, w)
    return CycleResult(
        q_h=q_h,
        q_l=q_l,
        w=w,
        eta=eta_engine if case is CycleCase.ENGINE else None,
        eta_carnot=carnot_efficiency(th, tl),
        case=case,
        work_ratio=w / q_h if q_h != 0 else None,
    )


def run_cycle(spec: CycleSpec) -> CycleResult:
    gap1, gap2 = spec.hot.gap, spec.cold.gap
    q_h, q_l, w = (float(v) for v in cycle_heats(gap1, gap2, spec.th, spec.tl))
    return make_result(q_h, q_l, w, gap_efficiency(gap1, gap2), spec.th, spec.tl)


def run_cycle_by_strokes(spec: CycleSpec) -> CycleResult:
    """Same cycle assembled stroke by stroke from Gibbs occupations."""
    e1 = spectrum(spec.hot).energies
    e2 = spectrum(spec.cold).energies
    p1 = gibbs_occupations(spec.hot, spec.th).probabilities
    p2 = gibbs_occupations(spec.cold, spec.tl).probabilities
    q_h = stroke_heat(e1, p2, p1)  # <1>, starting from p_i0 = p_i2
    work_on_2 = stroke_work(p1, e1, e2)  # <2>
    q_l = stroke_heat(e2, p1, p2)  # <3>
    work_on_4 = stroke_work(p2, e2, e1)  # <4>
    w = -(work_on_2 + work_on_4)
    return make_result(q_h, q_l, w, gap_efficiency(e1[2], e2[2]), spec.th, spec.tl)


def adiabatic_work(spec: CycleSpec) -> tuple[float, float]:
    """Work done on the system during strokes <2> and <4>."""
    e1 = spectrum(spec.hot).energies
    e2 = spectrum(spec.cold).energies
    p1 = gibbs_occupations(spec.hot, spec.th).probabilities
    p2 = gibbs_occupations(spec.cold, spec.tl).probabilities
    return stroke_work(p1, e1, e2), stroke_work(p2, e2, e1)


def positive_work_condition(spec: CycleSpec) -> bool:
    """``e1/Th < e2/Tl``, valid for antiferromagnetic cycles with ``0 < e2 < e1``.

    Raises :class:`RegimeError` outside that regime.
    """
    gap1, gap2 = spec.hot.gap, spec.cold.gap
    if not 0 < gap2 < gap1:
        raise RegimeError(
            f"positive-work condition applies only for 0 < e2 < e1 (got e1={gap1:g}, e2={gap2:g})"
        )
    return gap1 / spec.th < gap2 / spec.tl
