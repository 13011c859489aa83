"""The Otto cycle re-expressed in the stage-end concurrences C1 and C2.

C1 is the concurrence of the Gibbs state at the end of the hot stroke
(couplings j1, d1 at Th) and C2 the one at the end of the cold stroke
(j2, d2 at Tl). Since ``|e_k|/T_k = L(C_k)`` (see
:func:`spin_otto.spin_model.reduced_gap`) and ``tanh(L(c)/2) = sqrt(2(1+c)) - 1``,
the heats only depend on (C1, C2, Th, Tl)::

    q_h = sqrt(2) Th L(C1) (sqrt(1+C2) - sqrt(1+C1))
    q_l = sqrt(2) Tl L(C2) (sqrt(1+C1) - sqrt(1+C2))

The ferromagnetic branch carries ``-L(c)`` in place of ``L(c)`` together with
a swapped square-root difference, so both branches give the same numbers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import ConfigurationError, DomainError, RegimeError
from .otto_engine import CycleResult, CycleSpec, make_result
from .spin_model import Coupling, coupling_from_concurrence, reduced_gap

SQRT2 = math.sqrt(2.0)


def reduced_gap_reciprocal_form(c: float) -> float:
    """``ln(1 / (sqrt(2/(1+c)) - 1))``, algebraically equal to ``reduced_gap``.

    Loses digits as ``c -> 1`` where ``sqrt(2/(1+c)) - 1`` cancels.
    """
    if not 0 <= c < 1:
        raise DomainError(f"concurrence must lie in [0, 1), got {c!r}")
    return math.log(1.0 / (math.sqrt(2.0 / (1.0 + c)) - 1.0))


def _check_concurrence(name: str, c: float) -> None:
    if not math.isfinite(c) or c < 0:
        raise DomainError(f"{name} must be a concurrence in [0, 1), got {c!r}")
    if c >= 1:
        raise DomainError(f"{name} = {c!r}: unit concurrence requires an infinite coupling")


def _check_baths(th: float, tl: float) -> None:
    if not (math.isfinite(th) and math.isfinite(tl)):
        raise ConfigurationError("bath temperatures must be finite")
    if not th > tl:
        raise ConfigurationError("bath temperatures must satisfy Th > Tl")
    if not tl > 0:
        raise ConfigurationError("bath temperatures must be positive")


@dataclass(frozen=True)
class ConcurrenceCycleSpec:
    c1: float
    c2: float
    th: float
    tl: float
    d1: float = 0.0
    d2: float = 0.0
    sign: Coupling = Coupling.AFM

    def __post_init__(self):
        _check_concurrence("c1", self.c1)
        _check_concurrence("c2", self.c2)
        _check_baths(self.th, self.tl)

    @property
    def gamma(self) -> Optional[float]:
        """``c1 / c2``, or ``None`` when ``c2 == 0``."""
        return self.c1 / self.c2 if self.c2 > 0 else None

    def to_cycle_spec(self) -> CycleSpec:
        """Reconstruct the couplings: C1 binds to (d1, Th), C2 to (d2, Tl)."""
        return CycleSpec(
            j1=coupling_from_concurrence(self.c1, self.d1, self.th, self.sign),
            d1=self.d1,
            th=self.th,
            j2=coupling_from_concurrence(self.c2, self.d2, self.tl, self.sign),
            d2=self.d2,
            tl=self.tl,
        )


class WorkReason(enum.Enum):
    POSITIVE_WORK = "positive work: C1 < C2 and L(C1) Th > L(C2) Tl"
    EQUAL_CONCURRENCE = "trivial cycle: C1 = C2"
    HOT_STAGE_MORE_ENTANGLED = "no work: C1 > C2"
    BATH_RATIO_TOO_SMALL = "no work: L(C1) Th <= L(C2) Tl"


@dataclass(frozen=True)
class WorkCaseReport:
    case12: bool
    case13: bool
    feasible: bool
    reason: WorkReason


def _branch_log(c: float, sign: Coupling) -> float:
    # AFM: ln(1/(-1 + sqrt(2/(1+c)))) = L(c); FM: ln(-1 + sqrt(2/(1+c))) = -L(c)
    return reduced_gap(c) if sign is Coupling.AFM else -reduced_gap(c)


def _heats(spec: ConcurrenceCycleSpec) -> tuple[float, float, float]:
    s1, s2 = math.sqrt(1.0 + spec.c1), math.sqrt(1.0 + spec.c2)
    m1, m2 = _branch_log(spec.c1, spec.sign), _branch_log(spec.c2, spec.sign)
    if spec.sign is Coupling.AFM:
        q_h = SQRT2 * m1 * (s2 - s1) * spec.th
        q_l = SQRT2 * m2 * (s1 - s2) * spec.tl
    else:
        q_h = SQRT2 * m1 * (s1 - s2) * spec.th
        q_l = SQRT2 * m2 * (s2 - s1) * spec.tl
    return q_h, q_l, q_h + q_l


def _efficiency_formula(c1: float, c2: float, th: float, tl: float) -> float:
    return 1.0 - (reduced_gap(c2) * tl) / (reduced_gap(c1) * th)


def cycle_from_concurrence(spec: ConcurrenceCycleSpec) -> CycleResult:
    q_h, q_l, w = _heats(spec)
    eta = _efficiency_formula(spec.c1, spec.c2, spec.th, spec.tl)
    return make_result(q_h, q_l, w, eta, spec.th, spec.tl)


def classify_positive_work(spec: ConcurrenceCycleSpec) -> WorkCaseReport:
    s1, s2 = math.sqrt(1.0 + spec.c1), math.sqrt(1.0 + spec.c2)
    hot = _branch_log(spec.c1, spec.sign) * spec.th
    cold = _branch_log(spec.c2, spec.sign) * spec.tl
    if spec.sign is Coupling.AFM:
        case12 = s1 < s2 and hot > cold
        case13 = s1 > s2 and hot < cold
    else:
        case12 = s1 < s2 and hot < cold
        case13 = s1 > s2 and hot > cold
    if case13:
        # cannot happen for Th > Tl since L is increasing and positive
        raise AssertionError(f"C1 > C2 branch reported positive work for {spec}")

    if case12:
        reason = WorkReason.POSITIVE_WORK
    elif spec.c1 == spec.c2:
        reason = WorkReason.EQUAL_CONCURRENCE
    elif spec.c1 > spec.c2:
        reason = WorkReason.HOT_STAGE_MORE_ENTANGLED
    else:
        reason = WorkReason.BATH_RATIO_TOO_SMALL
    return WorkCaseReport(case12=case12, case13=case13, feasible=case12, reason=reason)


@dataclass(frozen=True)
class EfficiencyPoint:
    """Efficiency at one (C1, C2); ``abrupt`` marks the C1 = C2 point."""

    eta: float
    abrupt: bool


def efficiency_from_concurrence(
    c1: float, c2: float, th: float, tl: float, sign: Coupling = Coupling.AFM
) -> EfficiencyPoint:
    """``1 - L(C2) Tl / (L(C1) Th)`` for ``C1 < C2``; 0 with ``abrupt`` set at ``C1 = C2``.

    The value is the same for both coupling branches. It turns negative where
    the cycle stops producing work. ``C1 > C2`` raises :class:`RegimeError`.
    """
    _check_concurrence("c1", c1)
    _check_concurrence("c2", c2)
    _check_baths(th, tl)
    if c1 == c2:
        return EfficiencyPoint(eta=0.0, abrupt=True)
    if c1 > c2:
        raise RegimeError("efficiency in concurrence variables requires C1 <= C2")
    # the FM expression is the ratio of two negated logarithms
    m1, m2 = _branch_log(c1, sign), _branch_log(c2, sign)
    return EfficiencyPoint(eta=1.0 - (m2 * tl) / (m1 * th), abrupt=False)
