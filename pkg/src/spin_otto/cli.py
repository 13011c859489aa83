"""Command-line front end: single cycles, figure sweeps, feasibility maps, verification.

Exit status: 0 success, 1 invalid input, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import verify
from .concurrence_view import (
    ConcurrenceCycleSpec,
    classify_positive_work,
    cycle_from_concurrence,
    efficiency_from_concurrence,
)
from .errors import RegimeError, SpinOttoError
from .otto_engine import CycleSpec, carnot_efficiency, positive_work_condition, run_cycle

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3

DEFAULT_GAMMAS = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_RATIOS = (2.0, 5.0)


class UsageError(SpinOttoError):
    pass


@dataclass
class SweepConfig:
    mode: str
    j1: Optional[float] = None
    d1: float = 0.0
    j2: Optional[float] = None
    d2: float = 0.0
    th: Optional[float] = None
    tl: Optional[float] = None
    gammas: Sequence[float] = DEFAULT_GAMMAS
    ratios: Sequence[float] = DEFAULT_RATIOS
    c2_steps: int = 200
    c2_max: float = 0.999
    param: str = "jd"
    e1: float = 2.0
    x_range: tuple[float, float] = (0.1, 3.0)
    y_range: tuple[float, float] = (1.1, 8.0)
    nx: int = 100
    ny: int = 100
    out: Optional[str] = None
    seed: int = 0
    samples: int = 1000
    inject_fault: bool = False

    def validate(self) -> None:
        for name in ("c2_steps", "nx", "ny"):
            if getattr(self, name) < 2:
                raise UsageError(f"--{name.replace('_', '-')} must be at least 2")
        if not 0 < self.c2_max < 1:
            raise UsageError("--c2-max must lie in (0, 1)")
        for g in self.gammas:
            if not 0 <= g <= 1:
                raise UsageError(f"gamma values must lie in [0, 1], got {g}")
        for r in self.ratios:
            if not (math.isfinite(r) and r > 1):
                raise UsageError(f"temperature ratios must exceed 1, got {r}")
        for lo, hi in (self.x_range, self.y_range):
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise UsageError(f"grid bounds must be finite and ordered, got [{lo}, {hi}]")
        if self.samples < 1:
            raise UsageError("--samples must be positive")


def fmt(value: float) -> str:
    """Fixed six-decimal rendering; never emits ``-0.000000``."""
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def linspace(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def c2_grid(config: SweepConfig) -> list[float]:
    """``c2_max * k / c2_steps`` for ``k = 1..c2_steps``; excludes 0."""
    return [config.c2_max * k / config.c2_steps for k in range(1, config.c2_steps + 1)]


def cmd_cycle(config: SweepConfig) -> list[str]:
    missing = [k for k in ("j1", "j2", "th", "tl") if getattr(config, k) is None]
    if missing:
        raise UsageError("cycle requires " + ", ".join("--" + k for k in missing))
    spec = CycleSpec(config.j1, config.d1, config.th, config.j2, config.d2, config.tl)
    r = run_cycle(spec)
    try:
        condition = "true" if positive_work_condition(spec) else "false"
    except RegimeError:
        condition = "not applicable (requires 0 < e2 < e1)"
    return [
        f"Q_h: {fmt(r.q_h)}",
        f"Q_l: {fmt(r.q_l)}",
        f"W: {fmt(r.w)}",
        f"eta: {fmt(r.eta) if r.eta is not None else 'undefined'}",
        f"eta_c: {fmt(r.eta_carnot)}",
        f"case: {r.case.value}",
        f"work_ratio: {fmt(r.work_ratio) if r.work_ratio is not None else 'undefined'}",
        f"positive_work_condition: {condition}",
    ]


def cmd_fig12(config: SweepConfig) -> list[str]:
    th = 2.0 if config.th is None else config.th
    tl = 1.0 if config.tl is None else config.tl
    rows = ["gamma,c2,c1,q_h,q_l,w"]
    for gamma in config.gammas:
        for c2 in c2_grid(config):
            c1 = gamma * c2
            r = cycle_from_concurrence(ConcurrenceCycleSpec(c1, c2, th, tl))
            rows.append(",".join([fmt(gamma), fmt(c2), fmt(c1), fmt(r.q_h), fmt(r.q_l), fmt(r.w)]))
    return rows


def cmd_fig3(config: SweepConfig) -> list[str]:
    tl = 1.0
    rows = ["th_over_tl,gamma,c2,eta,eta_carnot,abrupt_flag"]
    for ratio in config.ratios:
        th = ratio * tl
        eta_c = carnot_efficiency(th, tl)
        for gamma in config.gammas:
            for c2 in c2_grid(config):
                point = efficiency_from_concurrence(gamma * c2, c2, th, tl)
                rows.append(
                    ",".join([fmt(ratio), fmt(gamma), fmt(c2), fmt(point.eta), fmt(eta_c), str(int(point.abrupt))])
                )
    return rows


def _feasible_jd(spec: CycleSpec) -> bool:
    try:
        return positive_work_condition(spec)
    except RegimeError:
        # e2 >= e1: no positive work is possible for Th > Tl
        return False


def cmd_region(config: SweepConfig) -> list[str]:
    rows = ["x,y,w,feasible"]
    xs = linspace(*config.x_range, config.nx)
    ys = linspace(*config.y_range, config.ny)
    if config.param == "jd":
        # x = cold gap e2, y = Th, at fixed hot gap e1 and Tl (d1 = d2 = 0)
        tl = 1.0 if config.tl is None else config.tl
        if config.x_range[0] <= 0 or config.e1 <= 0:
            raise UsageError("jd region needs positive gaps (--e1 and --x-min)")
        if config.y_range[0] <= tl:
            raise UsageError("bath temperatures must satisfy Th > Tl on the whole grid")
        for y in ys:
            for x in xs:
                spec = CycleSpec(config.e1, 0.0, y, x, 0.0, tl)
                w = run_cycle(spec).w
                rows.append(f"{fmt(x)},{fmt(y)},{fmt(w)},{int(_feasible_jd(spec))}")
    elif config.param == "concurrence":
        # x = c2, y = c1
        th = 2.0 if config.th is None else config.th
        tl = 1.0 if config.tl is None else config.tl
        for lo, hi in (config.x_range, config.y_range):
            if lo < 0 or hi >= 1:
                raise UsageError("concurrence grid bounds must lie in [0, 1)")
        for y in ys:
            for x in xs:
                spec = ConcurrenceCycleSpec(y, x, th, tl)
                w = cycle_from_concurrence(spec).w
                rows.append(f"{fmt(x)},{fmt(y)},{fmt(w)},{int(classify_positive_work(spec).feasible)}")
    else:
        raise UsageError(f"unknown region parameterization {config.param!r}")
    return rows


def cmd_verify(config: SweepConfig) -> tuple[list[str], bool]:
    results = verify.run_all(config.seed, config.samples, config.inject_fault)
    report = verify.format_report(results, config.seed)
    return report.rstrip("\n").split("\n"), all(r.passed for r in results)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spin-otto", description="Two-spin DM quantum Otto engine.")
    sub = parser.add_subparsers(dest="mode", required=True, parser_class=_Parser)

    def out_opt(p):
        p.add_argument("--out", help="output CSV path (default: stdout)")

    p = sub.add_parser("cycle", help="evaluate one cycle")
    for name in ("j1", "d1", "th", "j2", "d2", "tl"):
        p.add_argument(f"--{name}", type=float, default=0.0 if name.startswith("d") else None)

    p = sub.add_parser("fig12", help="heats and work vs C2 for several gamma = C1/C2")
    p.add_argument("--th", type=float, default=2.0)
    p.add_argument("--tl", type=float, default=1.0)
    p.add_argument("--gamma", type=float, nargs="+", default=list(DEFAULT_GAMMAS))
    p.add_argument("--c2-steps", type=int, default=200)
    p.add_argument("--c2-max", type=float, default=0.999)
    out_opt(p)

    p = sub.add_parser("fig3", help="efficiency vs C2 for several gamma and Th/Tl")
    p.add_argument("--ratio", type=float, nargs="+", default=list(DEFAULT_RATIOS))
    p.add_argument("--gamma", type=float, nargs="+", default=list(DEFAULT_GAMMAS))
    p.add_argument("--c2-steps", type=int, default=200)
    p.add_argument("--c2-max", type=float, default=0.999)
    out_opt(p)

    p = sub.add_parser("region", help="rasterize the positive-work region")
    p.add_argument("--param", choices=("jd", "concurrence"), default="jd")
    p.add_argument("--e1", type=float, default=2.0, help="hot-stage gap (jd mode)")
    p.add_argument("--th", type=float, default=None, help="hot bath (concurrence mode)")
    p.add_argument("--tl", type=float, default=None)
    p.add_argument("--x-min", type=float)
    p.add_argument("--x-max", type=float)
    p.add_argument("--y-min", type=float)
    p.add_argument("--y-max", type=float)
    p.add_argument("--nx", type=int, default=100)
    p.add_argument("--ny", type=int, default=100)
    out_opt(p)

    p = sub.add_parser("verify", help="run the closed-form vs numeric cross-checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


_REGION_DEFAULTS = {
    "jd": ((0.1, 3.0), (1.1, 8.0)),
    "concurrence": ((0.0, 0.99), (0.0, 0.99)),
}


def config_from_args(ns: argparse.Namespace) -> SweepConfig:
    config = SweepConfig(mode=ns.mode)
    for key in ("j1", "d1", "j2", "d2", "th", "tl", "c2_steps", "c2_max", "param", "e1",
                "nx", "ny", "out", "seed", "samples", "inject_fault"):
        if hasattr(ns, key):
            setattr(config, key, getattr(ns, key))
    if hasattr(ns, "gamma"):
        config.gammas = tuple(ns.gamma)
    if hasattr(ns, "ratio"):
        config.ratios = tuple(ns.ratio)
    if ns.mode == "region":
        (x0, x1), (y0, y1) = _REGION_DEFAULTS[ns.param]
        config.x_range = (x0 if ns.x_min is None else ns.x_min, x1 if ns.x_max is None else ns.x_max)
        config.y_range = (y0 if ns.y_min is None else ns.y_min, y1 if ns.y_max is None else ns.y_max)
    config.validate()
    return config


def _emit(lines: Iterable[str], out: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


COMMANDS = {"cycle": cmd_cycle, "fig12": cmd_fig12, "fig3": cmd_fig3, "region": cmd_region}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        config = config_from_args(ns)
        if config.mode == "verify":
            lines, ok = cmd_verify(config)
            _emit(lines, None)
            return EXIT_OK if ok else EXIT_VERIFY
        lines = COMMANDS[config.mode](config)
    except SpinOttoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        _emit(lines, config.out)
    except OSError as exc:
        print(f"error: cannot write {config.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
