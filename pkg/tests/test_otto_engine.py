import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spin_otto.errors import ConfigurationError, DomainError, RegimeError
from spin_otto.otto_engine import (
    CycleCase,
    CycleSpec,
    adiabatic_work,
    carnot_efficiency,
    classify_cycle,
    cycle_heats,
    efficiency,
    gap_efficiency,
    positive_work_condition,
    run_cycle,
    run_cycle_by_strokes,
    stroke_heat,
    stroke_work,
)
from spin_otto.spin_model import ModelParams, gibbs_occupations

# mpmath, 30 digits
P_HALF = (0.2350037122015945, 0.2350037122015945, 0.14253695659655095, 0.38745561900026008)
HEAT_UNIFORM_TO_HALF = -0.4898373248074183
WORK_HALF = 0.2449186624037091
QH_EXAMPLE = 0.4343969897126013
QL_EXAMPLE = -0.2171984948563006


@st.composite
def cycle_specs(draw):
    sign = draw(st.sampled_from([1.0, -1.0]))
    j1 = sign * draw(st.floats(0.1, 5))
    j2 = sign * draw(st.floats(0.1, 5))
    d1, d2 = draw(st.floats(-3, 3)), draw(st.floats(-3, 3))
    tl = draw(st.floats(0.05, 3))
    th = draw(st.floats(tl * (1 + 1e-9), 5).filter(lambda t: t > tl))
    return CycleSpec(j1, d1, th, j2, d2, tl)


def test_stroke_heat_examples():
    assert stroke_heat((0, 0, 1, -1), P_HALF, P_HALF) == 0.0
    p = gibbs_occupations(ModelParams(2, 0), 4.0).probabilities
    np.testing.assert_allclose(p, P_HALF, rtol=1e-14)
    heat = stroke_heat((0, 0, 2, -2), (0.25,) * 4, p)
    assert heat == pytest.approx(HEAT_UNIFORM_TO_HALF, rel=1e-13)
    assert stroke_heat((0, 0, 0, 0), (0.25,) * 4, (1, 0, 0, 0)) == 0.0


def test_stroke_heat_equals_energy_change():
    e = (0.0, 0.0, 2.0, -2.0)
    p = gibbs_occupations(ModelParams(2, 0), 4.0).probabilities
    u_before = np.dot(e, [0.25] * 4)
    u_after = np.dot(e, p)
    assert stroke_heat(e, (0.25,) * 4, p) == pytest.approx(u_after - u_before, abs=1e-15)


def test_stroke_work_examples():
    assert stroke_work(P_HALF, (0, 0, 2, -2), (0, 0, 2, -2)) == 0.0
    assert stroke_work((0.25,) * 4, (0, 0, 1.7, -1.7), (0, 0, -0.4, 0.4)) == 0.0
    work = stroke_work(P_HALF, (0, 0, 2, -2), (0, 0, 1, -1))
    assert work == pytest.approx(WORK_HALF, rel=1e-13)


@pytest.mark.parametrize("p", [(0.5, 0.5, 0.5, 0.5), (0.3, 0.3, 0.3, 0.0), (1.2, -0.2, 0, 0)])
def test_unnormalized_probabilities_rejected(p):
    with pytest.raises(DomainError):
        stroke_work(p, (0, 0, 1, -1), (0, 0, 2, -2))
    with pytest.raises(DomainError):
        stroke_heat((0, 0, 1, -1), p, (0.25,) * 4)


def test_run_cycle_example():
    r = run_cycle(CycleSpec(2, 0, 4, 1, 0, 1))
    assert r.q_h == pytest.approx(QH_EXAMPLE, rel=1e-14)
    assert r.q_l == pytest.approx(QL_EXAMPLE, rel=1e-14)
    assert r.w == pytest.approx(-QL_EXAMPLE, rel=1e-14)
    assert r.eta == 0.5
    assert r.eta_carnot == 0.75
    assert r.case is CycleCase.ENGINE
    assert r.work_ratio == pytest.approx(0.5, rel=1e-14)


def test_boundary_cycle_is_trivial():
    # e1/Th = e2/Tl: both tanh arguments are 0.5
    r = run_cycle(CycleSpec(2, 0, 2, 1, 0, 1))
    assert r.q_h == r.q_l == r.w == 0.0
    assert r.case is CycleCase.TRIVIAL
    assert r.eta is None


@pytest.mark.parametrize("spec", [CycleSpec(1.3, 0.4, 3.0, 1.3, 0.4, 1.0), CycleSpec(-2, 1, 5, -2, 1, 0.1)])
def test_identical_spectra_leak_heat_without_work(spec):
    # equal gaps kill the work but heat still flows from the hot to the cold bath
    r = run_cycle(spec)
    assert r.w == 0.0
    assert r.q_h == -r.q_l > 0
    assert r.case is CycleCase.NON_ENGINE
    assert r.eta is None


def test_non_engine_reports_ratio_not_efficiency():
    r = run_cycle(CycleSpec(2, 0, 1.5, 1, 0, 1))
    assert r.w < 0
    assert r.case is CycleCase.NON_ENGINE
    assert r.eta is None
    assert r.work_ratio == pytest.approx(r.w / r.q_h)


@pytest.mark.parametrize(
    "kwargs, message",
    [
        (dict(j1=2, d1=0, th=1, j2=1, d2=0, tl=1), "Th > Tl"),
        (dict(j1=2, d1=0, th=1, j2=1, d2=0, tl=2), "Th > Tl"),
        (dict(j1=1, d1=0, th=4, j2=-1, d2=0, tl=1), "share a sign"),
        (dict(j1=0, d1=0, th=4, j2=1, d2=0, tl=1), "nonzero"),
        (dict(j1=1, d1=0, th=0, j2=1, d2=0, tl=-1), "positive"),
        (dict(j1=1, d1=0, th=1, j2=1, d2=0, tl=-1), "positive"),
        (dict(j1=1, d1=math.nan, th=2, j2=1, d2=0, tl=1), "finite"),
    ],
)
def test_invalid_specs_rejected(kwargs, message):
    with pytest.raises(ConfigurationError, match=message):
        CycleSpec(**kwargs)


def test_positive_work_condition_examples():
    assert positive_work_condition(CycleSpec(2, 0, 4, 1, 0, 1)) is True
    assert positive_work_condition(CycleSpec(2, 0, 2, 1, 0, 1)) is False
    # without DM the condition reads th > tl * j1/j2
    for th in (2.9, 3.1):
        assert positive_work_condition(CycleSpec(3, 0, th, 1, 0, 1)) is (th > 3)


@pytest.mark.parametrize(
    "spec", [CycleSpec(1, 0, 4, 2, 0, 1), CycleSpec(1, 0, 4, 1, 0, 1), CycleSpec(-2, 0, 4, -1, 0, 1)]
)
def test_positive_work_condition_regime(spec):
    with pytest.raises(RegimeError):
        positive_work_condition(spec)


@given(cycle_specs())
def test_positive_work_condition_agrees_with_sign_of_work(spec):
    gap1, gap2 = spec.hot.gap, spec.cold.gap
    if not 0 < gap2 < gap1:
        return
    r = run_cycle(spec)
    if positive_work_condition(spec) != (r.w > 0):
        assert abs(r.w) <= 1e-12


def test_efficiency_examples():
    assert efficiency(CycleSpec(2, 0, 4, 1, 0, 1)) == 0.5
    assert efficiency(CycleSpec(1, math.sqrt(3), 4, 1, 0, 1)) == pytest.approx(0.5, abs=1e-15)
    assert efficiency(CycleSpec(-2, 0, 4, -1, 0, 1)) == 0.5
    assert efficiency(CycleSpec(1.5, 0.5, 4, 1.5, -0.5, 1)) == 0.0
    with pytest.raises(ZeroDivisionError):
        gap_efficiency(0.0, 1.0)


@given(cycle_specs(), st.floats(0.05, 3), st.floats(1.01, 10))
def test_efficiency_independent_of_temperature(spec, tl, ratio):
    other = CycleSpec(spec.j1, spec.d1, tl * ratio, spec.j2, spec.d2, tl)
    assert efficiency(other) == efficiency(spec)


def test_carnot_efficiency():
    assert carnot_efficiency(2, 1) == 0.5
    assert carnot_efficiency(4, 1) == 0.75
    assert carnot_efficiency(1.5, 1.5) == 0.0
    with pytest.raises(DomainError):
        carnot_efficiency(1, 2)
    with pytest.raises(DomainError):
        carnot_efficiency(1, 0)


@given(cycle_specs())
def test_first_law_and_stroke_composition(spec):
    r = run_cycle(spec)
    assert r.w == r.q_h + r.q_l
    on_2, on_4 = adiabatic_work(spec)
    assert r.w == pytest.approx(-(on_2 + on_4), abs=1e-12)
    s = run_cycle_by_strokes(spec)
    assert (s.q_h, s.q_l, s.w) == pytest.approx((r.q_h, r.q_l, r.w), abs=1e-12)


@given(cycle_specs())
def test_second_law(spec):
    r = run_cycle(spec)
    if r.w > 0:
        assert r.case is CycleCase.ENGINE
        assert r.q_h > -r.q_l > 0
        assert 0 < r.eta < r.eta_carnot
    assert r.case not in (CycleCase.COLD_DRIVEN, CycleCase.DOUBLE_ABSORPTION)


@given(cycle_specs())
def test_ferromagnetic_mirror(spec):
    mirror = CycleSpec(-spec.j1, spec.d1, spec.th, -spec.j2, spec.d2, spec.tl)
    a, b = run_cycle(spec), run_cycle(mirror)
    assert (a.q_h, a.q_l, a.w) == (b.q_h, b.q_l, b.w)


def test_classify_cycle_all_cases():
    assert classify_cycle(0, 0, 0) is CycleCase.TRIVIAL
    assert classify_cycle(1e-13, -1e-13, 0) is CycleCase.TRIVIAL
    assert classify_cycle(1.0, -1.5, -0.5) is CycleCase.NON_ENGINE
    assert classify_cycle(1.0, -0.5, 0.5) is CycleCase.ENGINE
    assert classify_cycle(-0.5, 1.0, 0.5) is CycleCase.COLD_DRIVEN
    assert classify_cycle(0.2, 0.3, 0.5) is CycleCase.DOUBLE_ABSORPTION


def test_cycle_heats_vectorized():
    gaps1 = np.array([2.0, 1.0, 3.0])
    q_h, q_l, w = cycle_heats(gaps1, 1.0, 4.0, 1.0)
    for k, g in enumerate(gaps1):
        r = run_cycle(CycleSpec(g, 0, 4, 1, 0, 1))
        assert (q_h[k], q_l[k], w[k]) == (r.q_h, r.q_l, r.w)
