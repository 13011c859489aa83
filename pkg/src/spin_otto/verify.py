"""Seeded cross-checks between the closed forms and the numeric oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from . import numeric_oracle
from .concurrence_view import ConcurrenceCycleSpec, cycle_from_concurrence
from .otto_engine import (
    CycleCase,
    CycleResult,
    CycleSpec,
    adiabatic_work,
    make_result,
    run_cycle,
)
from .spin_model import (
    ASINH_ONE,
    Coupling,
    ModelParams,
    concurrence,
    coupling_from_concurrence,
    spectrum,
)

TOLERANCE = 1e-10


@dataclass
class SuiteResult:
    name: str
    samples: int
    max_deviation: float
    tolerance: float
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


class _Tracker:
    def __init__(self, name: str, tolerance: float):
        self.result = SuiteResult(name, 0, 0.0, tolerance)

    def record(self, deviation: float, where: str) -> None:
        r = self.result
        r.samples += 1
        if not deviation <= r.tolerance and r.first_failure is None:
            r.first_failure = where
        if deviation > r.max_deviation or math.isnan(deviation):
            r.max_deviation = deviation


def random_specs(rng: np.random.Generator, n: int) -> Iterator[CycleSpec]:
    """|j| in [0.1, 5] with a shared random sign, d in [-3, 3], Tl in (0.05, 3], Th in (Tl, 5]."""
    for _ in range(n):
        sign = 1.0 if rng.random() < 0.5 else -1.0
        j1, j2 = sign * rng.uniform(0.1, 5.0, size=2)
        d1, d2 = rng.uniform(-3.0, 3.0, size=2)
        tl = rng.uniform(0.05, 3.0)
        th = rng.uniform(tl, 5.0)
        if th == tl:
            th = np.nextafter(tl, np.inf)
        yield CycleSpec(float(j1), float(d1), float(th), float(j2), float(d2), float(tl))


def random_thermal_points(rng: np.random.Generator, n: int, near_threshold: int = 50):
    """(params, T) samples; the last ``near_threshold`` sit within 1e-3 of |eps|/T = arcsinh(1)."""
    for k in range(n):
        params = ModelParams(float(rng.uniform(-5, 5)), float(rng.uniform(-3, 3)))
        if k >= n - near_threshold:
            x = ASINH_ONE + rng.uniform(-1e-3, 1e-3)
            temperature = abs(params.gap) / x
        else:
            temperature = float(rng.uniform(0.05, 5.0))
        yield params, temperature


def _fmt(spec) -> str:
    def show(v):
        return v.name if isinstance(v, Coupling) else repr(v)

    return "(" + ", ".join(f"{k}={show(v)}" for k, v in vars(spec).items()) + ")"


def suite_cycle_oracle(seed: int, n: int, cycle_fn: Callable[[CycleSpec], CycleResult] = run_cycle):
    t = _Tracker("cycle-oracle", TOLERANCE)
    for spec in random_specs(np.random.default_rng([seed, 1]), n):
        a, b = cycle_fn(spec), numeric_oracle.simulate_cycle(spec)
        t.record(max(abs(a.q_h - b.q_h), abs(a.q_l - b.q_l), abs(a.w - b.w)), _fmt(spec))
    return t.result


def suite_spectrum_oracle(seed: int, n: int):
    t = _Tracker("spectrum-oracle", TOLERANCE)
    rng = np.random.default_rng([seed, 2])
    for _ in range(n):
        params = ModelParams(float(rng.uniform(-5, 5)), float(rng.uniform(-3, 3)))
        exact, num = spectrum(params), numeric_oracle.diagonalize(params)
        dev = max(abs(a - b) for a, b in zip(exact.energies, num.energies))
        dev = max(dev, abs(exact.theta - num.theta))
        t.record(dev, f"(j={params.j!r}, d={params.d!r})")
    return t.result


def suite_concurrence_oracle(seed: int, n: int):
    t = _Tracker("concurrence-oracle", TOLERANCE)
    for params, temp in random_thermal_points(np.random.default_rng([seed, 3]), n):
        dev = abs(concurrence(params, temp) - numeric_oracle.thermal_concurrence(params, temp))
        t.record(dev, f"(j={params.j!r}, d={params.d!r}, T={temp!r})")
    return t.result


def suite_first_law(seed: int, n: int, cycle_fn: Callable[[CycleSpec], CycleResult] = run_cycle):
    t = _Tracker("first-law", TOLERANCE)
    for spec in random_specs(np.random.default_rng([seed, 4]), n):
        r = cycle_fn(spec)
        on_2, on_4 = adiabatic_work(spec)
        t.record(max(abs(r.w - (r.q_h + r.q_l)), abs(r.w + on_2 + on_4)), _fmt(spec))
    return t.result


def suite_second_law(seed: int, n: int, cycle_fn: Callable[[CycleSpec], CycleResult] = run_cycle):
    """Deviation is the largest ``eta - eta_c`` (clipped at 0) among working engines."""
    t = _Tracker("second-law", 0.0)
    for spec in random_specs(np.random.default_rng([seed, 5]), n):
        r = cycle_fn(spec)
        if r.w <= 0:
            t.record(0.0, _fmt(spec))
            continue
        ok = r.case is CycleCase.ENGINE and r.q_h > -r.q_l > 0 and r.eta < r.eta_carnot
        excess = max(0.0, (r.eta if r.eta is not None else math.inf) - r.eta_carnot)
        t.record(excess if ok else math.inf, _fmt(spec))
    return t.result


def suite_round_trip():
    t = _Tracker("round-trip", TOLERANCE)
    for c in np.round(np.arange(1, 100) * 0.01, 2):
        for d in (0.0, 1.0, 5.0):
            for temp in (0.5, 1.0, 3.0):
                for sign in Coupling:
                    j = coupling_from_concurrence(float(c), d, temp, sign)
                    dev = abs(concurrence(ModelParams(j, d), temp) - c)
                    t.record(dev, f"(c={c!r}, d={d!r}, T={temp!r}, {sign.name})")
    return t.result


def suite_view_consistency(seed: int, n: int, cycle_fn: Callable[[CycleSpec], CycleResult] = run_cycle):
    t = _Tracker("view-consistency", TOLERANCE)
    rng = np.random.default_rng([seed, 6])
    for _ in range(n):
        c1, c2 = (float(v) for v in rng.uniform(1e-6, 0.99, size=2))
        tl = float(rng.uniform(0.05, 3.0))
        th = float(rng.uniform(tl, 5.0))
        d1, d2 = (float(v) for v in rng.uniform(-3, 3, size=2))
        sign = Coupling.AFM if rng.random() < 0.5 else Coupling.FM
        view = ConcurrenceCycleSpec(c1, c2, th, tl, d1, d2, sign)
        a, b = cycle_from_concurrence(view), cycle_fn(view.to_cycle_spec())
        t.record(max(abs(a.q_h - b.q_h), abs(a.q_l - b.q_l), abs(a.w - b.w)), _fmt(view))
    return t.result


def faulty_run_cycle(spec: CycleSpec) -> CycleResult:
    """``run_cycle`` with the sign of the cold-bath heat flipped; negative control."""
    good = run_cycle(spec)
    q_l = -good.q_l
    return make_result(good.q_h, q_l, good.q_h + q_l, good.eta or 0.0, spec.th, spec.tl)


def run_all(seed: int = 0, samples: int = 1000, inject_fault: bool = False) -> list[SuiteResult]:
    cycle_fn = faulty_run_cycle if inject_fault else run_cycle
    return [
        suite_spectrum_oracle(seed, samples),
        suite_concurrence_oracle(seed, samples),
        suite_cycle_oracle(seed, samples, cycle_fn),
        suite_first_law(seed, samples, cycle_fn),
        suite_second_law(seed, samples, cycle_fn),
        suite_round_trip(),
        suite_view_consistency(seed, samples, cycle_fn),
    ]


def format_report(results: list[SuiteResult], seed: int) -> str:
    lines = [f"seed: {seed}", f"{'suite':<20}{'samples':>8}  {'max_deviation':>13}  {'tolerance':>9}  status"]
    for r in results:
        lines.append(
            f"{r.name:<20}{r.samples:>8}  {r.max_deviation:>13.6e}  {r.tolerance:>9.1e}  "
            + ("PASS" if r.passed else "FAIL")
        )
    for r in results:
        if not r.passed:
            lines.append(f"{r.name}: first failure at {r.first_failure}")
    lines.append("result: " + ("PASS" if all(r.passed for r in results) else "FAIL"))
    return "\n".join(lines) + "\n"

