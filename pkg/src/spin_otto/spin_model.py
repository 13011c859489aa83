"""Closed-form physics of one two-spin XX system with a DM interaction along z.

The Hamiltonian is ``H = J[(1 + iD) s1+ s2- + (1 - iD) s1- s2+]``. Its
eigenstates are kept in a fixed order that does not depend on the sign of J::

    psi1 = |00>
    psi2 = |11>
    psi3 = (|01> + e^{i theta}|10>) / sqrt(2)     E3 = +J sqrt(1 + D^2)
    psi4 = (|01> - e^{i theta}|10>) / sqrt(2)     E4 = -J sqrt(1 + D^2)

with ``theta = arctan(D)``. Boltzmann's constant is set to one, so
temperatures are measured in energy units.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

# arcsinh(1); the concurrence of the thermal state vanishes once |J|sqrt(1+D^2)/T
# drops to this value.
ASINH_ONE = math.log(1.0 + math.sqrt(2.0))


class Coupling(enum.Enum):
    """Sign branch of the exchange coupling."""

    AFM = 1  # J > 0
    FM = -1  # J < 0

    @classmethod
    def of(cls, j: float) -> "Coupling":
        if j > 0:
            return cls.AFM
        if j < 0:
            return cls.FM
        raise DomainError("zero coupling has no AFM/FM branch")


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")


def _require_temperature(temperature: float) -> None:
    _require_finite(temperature=temperature)
    if temperature <= 0:
        raise DomainError(f"temperature must be positive, got {temperature!r}")


@dataclass(frozen=True)
class ModelParams:
    """Coupling ``j`` and DM strength ``d`` of one two-spin Hamiltonian."""

    j: float
    d: float = 0.0

    def __post_init__(self):
        _require_finite(j=self.j, d=self.d)
        if not math.isfinite(self.gap):
            raise DomainError(f"gap j*sqrt(1+d^2) overflows for j={self.j}, d={self.d}")

    @property
    def gap(self) -> float:
        """Signed gap ``j * sqrt(1 + d**2)``, equal to E3 = -E4."""
        return self.j * math.hypot(1.0, self.d)


@dataclass(frozen=True)
class Spectrum:
    """Eigenenergies in the fixed order (E1, E2, E3, E4) and the phase theta."""

    energies: tuple[float, float, float, float]
    theta: float

    @property
    def gap(self) -> float:
        return self.energies[2]


@dataclass(frozen=True)
class ThermalState:
    """Gibbs occupations of the four eigenstates at one temperature."""

    temperature: float
    beta: float
    partition: float
    probabilities: tuple[float, float, float, float]


def spectrum(params: ModelParams) -> Spectrum:
    """Return ``(0, 0, eps, -eps)`` with ``eps = j*sqrt(1+d^2)``, unsorted."""
    eps = params.gap
    return Spectrum(energies=(0.0, 0.0, eps, -eps), theta=math.atan(params.d))


def gibbs_occupations(params: ModelParams, temperature: float) -> ThermalState:
    """Boltzmann occupations ``p_i = exp(-E_i/T)/Z`` in eigenstate order.

    ``Z = 2 + 2 cosh(eps/T)``. The probabilities are evaluated through
    ``u = exp(-|eps|/T)`` so that very low temperatures do not overflow; the
    partition function itself is returned as ``inf`` once it exceeds the
    float range.
    """
    _require_temperature(temperature)
    beta = 1.0 / temperature
    x = beta * params.gap
    u = math.exp(-abs(x))
    norm = (1.0 + u) ** 2
    p_ground = 1.0 / norm
    p_zero = u / norm
    p_excited = u * u / norm
    if x >= 0:
        probabilities = (p_zero, p_zero, p_excited, p_ground)
    else:
        probabilities = (p_zero, p_zero, p_ground, p_excited)
    try:
        partition = math.exp(abs(x)) * norm
    except OverflowError:
        partition = math.inf
    return ThermalState(
        temperature=temperature,
        beta=beta,
        partition=partition,
        probabilities=probabilities,
    )


def mean_energy(params: ModelParams, temperature: float) -> float:
    """Thermal average ``U = sum_i p_i E_i = -eps tanh(eps / 2T)``."""
    state = gibbs_occupations(params, temperature)
    return sum(p * e for p, e in zip(state.probabilities, spectrum(params).energies))


def critical_temperature(params: ModelParams) -> float:
    """Temperature above which the thermal concurrence is exactly zero."""
    return abs(params.gap) / ASINH_ONE


def concurrence(params: ModelParams, temperature: float) -> float:
    """Thermal concurrence of the Gibbs state.

    ``C = (sinh x - 1)/(cosh x + 1)`` with ``x = |eps|/T`` while
    ``T < T_c``, and exactly zero for ``T >= T_c``. The ratio is rewritten in
    ``u = exp(-x)`` as ``(1 - 2u - u^2)/(1 + u)^2`` to stay finite for large x.
    """
    _require_temperature(temperature)
    if temperature >= critical_temperature(params):
        return 0.0
    u = math.exp(-abs(params.gap) / temperature)
    return max(0.0, (1.0 - 2.0 * u - u * u) / (1.0 + u) ** 2)


def reduced_gap(c: float) -> float:
    """Inverse of the concurrence law: the ``|eps|/T`` whose concurrence is ``c``.

    ``L(c) = ln(((1 + c) + sqrt(2(1 + c))) / (1 - c))``, the positive root of the
    quadratic in ``exp(x)``. ``L(0) = arcsinh(1)`` and ``L(c) -> inf`` as ``c -> 1``.
    """
    _require_finite(c=c)
    if c < 0:
        raise DomainError(f"concurrence must be non-negative, got {c!r}")
    if c >= 1:
        raise DomainError("concurrence 1 requires an infinite coupling")
    return math.log(((1.0 + c) + math.sqrt(2.0 * (1.0 + c))) / (1.0 - c))


def coupling_from_concurrence(
    c: float, d: float, temperature: float, sign: Coupling = Coupling.AFM
) -> float:
    """Coupling ``j`` whose Gibbs state at ``temperature`` has concurrence ``c``.

    For ``c = 0`` the threshold coupling ``T arcsinh(1)/sqrt(1+d^2)`` is
    returned; every weaker coupling also gives zero concurrence.
    """
    _require_temperature(temperature)
    _require_finite(d=d)
    magnitude = temperature / math.hypot(1.0, d) * reduced_gap(c)
    return magnitude if sign is Coupling.AFM else -magnitude
