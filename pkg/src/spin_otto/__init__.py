"""Quantum Otto engine with a two-spin Heisenberg XX + Dzyaloshinski-Moriya working substance."""

from .concurrence_view import (
    ConcurrenceCycleSpec,
    EfficiencyPoint,
    WorkCaseReport,
    WorkReason,
    classify_positive_work,
    cycle_from_concurrence,
    efficiency_from_concurrence,
)
from .errors import ConfigurationError, DomainError, RegimeError, SpinOttoError
from .otto_engine import (
    CycleCase,
    CycleResult,
    CycleSpec,
    carnot_efficiency,
    efficiency,
    positive_work_condition,
    run_cycle,
    stroke_heat,
    stroke_work,
)
from .spin_model import (
    Coupling,
    ModelParams,
    Spectrum,
    ThermalState,
    concurrence,
    coupling_from_concurrence,
    critical_temperature,
    gibbs_occupations,
    spectrum,
)

__version__ = "0.1.0"
