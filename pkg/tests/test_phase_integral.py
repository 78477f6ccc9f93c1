import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bogorad.condensate import make_mode
from bogorad.phase_integral import (
    PanelBudgetExceeded,
    PhaseIntegral,
    RegulatorConvergenceError,
    RegulatorSpec,
    Window,
    extrapolate_regulator,
    integrate_closed_constant_velocity,
    integrate_closed_exponential,
    integrate_closed_uniform_acceleration,
    integrate_numeric,
    integrate_regulated,
    reference_rate,
)
from bogorad.trajectory import ConstantVelocity, ExponentialDecay, Sampled, UniformAccelerationRel, translate

from bogorad.condensate import CondensateParams

from conftest import rel

NATURAL = CondensateParams.natural(1.0, 1.0)


def _planck(omega, rate, upper):
    x = 2 * math.pi * omega / rate
    return 2 * math.pi / (omega * rate) / (math.expm1(x) if upper else -math.expm1(-x))


# -- containers ---------------------------------------------------------------


@pytest.mark.parametrize("t_i, t_f", [(1.0, 1.0), (2.0, 1.0), (math.nan, 1.0), (math.inf, math.inf)])
def test_bad_windows(t_i, t_f):
    with pytest.raises(ValueError):
        Window(t_i, t_f)


def test_window_kinds():
    assert Window().is_full_line and not Window().is_finite
    assert Window(0.0, 1.0).is_finite
    assert not Window(0.0).is_finite and not Window(0.0).is_full_line


@pytest.mark.parametrize(
    "kwargs",
    [dict(kind="cosine"), dict(ladder=(0.1,)), dict(ladder=(0.1, 0.2)), dict(ladder=(0.1, -0.05)),
     dict(ladder=(0.2, 0.1), order=2)],
)
def test_bad_regulators(kwargs):
    with pytest.raises(ValueError):
        RegulatorSpec(**kwargs)


def test_regulator_defaults_to_full_order():
    assert RegulatorSpec().order == len(RegulatorSpec().ladder) - 1


def test_negative_error_rejected():
    with pytest.raises(ValueError):
        PhaseIntegral(1j, -1.0, "numeric")


# -- extrapolation --------------------------------------------------------------


@given(st.lists(st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False), min_size=1,
                max_size=4))
def test_extrapolation_is_exact_for_polynomials(coeffs):
    eps = [0.4, 0.2, 0.1, 0.05, 0.025]
    values = [(e, sum(c * e**j for j, c in enumerate(coeffs))) for e in eps]
    out = extrapolate_regulator(values, order=len(eps) - 1)
    assert abs(out.value - coeffs[0]) <= 1e-9 * max(1.0, max(abs(c) for c in coeffs))


def test_extrapolation_refuses_divergent_ladder():
    # converging on the small-eps side, then wild at the largest eps
    values = list(zip((0.4, 0.2, 0.1, 0.05), (5.0, 1.11, 1.1, 1.0)))
    with pytest.raises(RegulatorConvergenceError) as info:
        extrapolate_regulator(values)
    assert len(info.value.residuals) == 3


def test_extrapolation_rejects_mixed_modes(natural):
    a = PhaseIntegral(1j, 0.0, "numeric", mode_key=(1.0, 0.1))
    b = PhaseIntegral(1j, 0.0, "numeric", mode_key=(2.0, 0.1))
    with pytest.raises(ValueError, match="different modes"):
        extrapolate_regulator([(0.2, a), (0.1, b)])


def test_extrapolation_input_validation():
    with pytest.raises(ValueError):
        extrapolate_regulator([(0.1, 1.0)])
    with pytest.raises(ValueError):
        extrapolate_regulator([(0.1, 1.0), (0.1, 2.0)])


# -- exponential decay ------------------------------------------------------------


@settings(max_examples=25)
@given(st.floats(0.2, 5.0), st.floats(-3.0, 3.0).filter(lambda x: abs(x) > 0.05), st.floats(0.3, 4.0))
def test_windowed_exponential_matches_quadrature(ratio, kz_zeta, duration):
    mode = make_mode(NATURAL, 1.0, 0.6)
    zeta0 = kz_zeta / mode.k_z
    rate = mode.omega / ratio
    window = Window(-0.5 / rate, duration / rate)
    closed = integrate_closed_exponential(mode, zeta0, rate, window)
    numeric = integrate_numeric(mode, ExponentialDecay(zeta0, rate), window)
    assert closed.provenance == "closed_form" and numeric.provenance == "numeric"
    assert rel(numeric.value, closed.value) <= 1e-8


@pytest.mark.parametrize("ratio", [0.1, 0.5, 1.0, 2.0, 5.0])
@pytest.mark.parametrize("upper", [True, False])
def test_full_line_reproduces_planck(natural, ratio, upper):
    mode = make_mode(natural, 1.0, 0.8 if upper else math.pi - 0.8)
    rate = mode.omega / ratio
    traj = ExponentialDecay(1.0, rate)
    target = _planck(mode.omega, rate, upper)
    closed = integrate_closed_exponential(mode, 1.0, rate)
    assert closed.abs2 == pytest.approx(target, rel=1e-10)
    numeric = integrate_numeric(mode, traj, Window(), RegulatorSpec())
    assert numeric.provenance == "regulator_extrapolated"
    assert numeric.abs2 == pytest.approx(target, rel=1e-3)
    assert abs(numeric.value - closed.value) <= max(5 * numeric.error, 1e-6 * abs(closed.value))


def test_half_line_regulated_matches_closed_form(natural):
    mode = make_mode(natural, 1.3, 0.4)
    rate = 0.9
    window = Window(-1.0, math.inf)
    numeric = integrate_numeric(mode, ExponentialDecay(1.0, rate), window, RegulatorSpec())
    closed = integrate_closed_exponential(mode, 1.0, rate, window)
    assert rel(numeric.value, closed.value) <= 1e-5


def test_equatorial_mode_is_a_pure_tone(natural):
    mode = make_mode(natural, 1.0, math.pi / 2)
    out = integrate_closed_exponential(mode, 1.0, 1.0)
    assert out.value == 0 and out.distribution.name == "delta(omega_k)"
    assert out.distribution.coefficient == 2 * math.pi
    finite = integrate_closed_exponential(mode, 1.0, 1.0, Window(0.0, 2.0))
    expected = (cmath.exp(2j * mode.omega) - 1) / (1j * mode.omega)
    assert finite.distribution is None and abs(finite.value - expected) < 1e-15


def test_reference_rate(natural):
    mode = make_mode(natural, 2.0, 0.3)
    assert reference_rate(mode, ExponentialDecay(1.0, 1.0)) == mode.omega
    expected = mode.omega - mode.k_z
    assert reference_rate(mode, UniformAccelerationRel(1.0)) == pytest.approx(expected)


def test_infinite_window_needs_regulator(natural):
    mode = make_mode(natural, 1.0, 0.3)
    with pytest.raises(ValueError, match="regulator"):
        integrate_numeric(mode, ExponentialDecay(1.0, 1.0), Window())
    with pytest.raises(ValueError, match="regulator"):
        integrate_numeric(mode, ExponentialDecay(1.0, 1.0), Window(), RegulatorSpec(kind="none"))


def test_panel_budget(natural):
    mode = make_mode(natural, 30.0, 0.3)
    with pytest.raises(PanelBudgetExceeded) as info:
        integrate_numeric(mode, ExponentialDecay(1.0, 1.0), Window(0.0, 50.0), max_panels=10)
    a, b = info.value.worst_panel
    assert 0.0 <= a < b <= 50.0


def test_regulated_value_moves_with_eps(natural):
    mode = make_mode(natural, 1.0, 0.3)
    traj = ExponentialDecay(1.0, 1.0)
    a = integrate_regulated(mode, traj, Window(), "exponential", 0.2)
    b = integrate_regulated(mode, traj, Window(), "exponential", 0.1)
    assert abs(a.value - b.value) > 1e-3


# -- uniform acceleration -------------------------------------------------------------


@pytest.mark.parametrize("k", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("theta", [0.3, 1.2, 2.6])
def test_uniform_acceleration_matches_bessel_form(natural, k, theta):
    mode = make_mode(natural, k, theta)
    closed = integrate_closed_uniform_acceleration(mode, 1.0)
    numeric = integrate_numeric(mode, UniformAccelerationRel(1.0), Window(), RegulatorSpec())
    assert rel(numeric.value, closed.value) <= 1e-6


def test_uniform_acceleration_equator_is_exactly_zero(natural):
    out = integrate_closed_uniform_acceleration(make_mode(natural, 1.3, math.pi / 2), 0.7)
    assert out.value == 0
    assert out.distribution.name == "delta(mu_k)"


@given(st.floats(0.05, 5.0), st.floats(0.05, 1.5), st.floats(0.1, 4.0))
def test_uniform_acceleration_reflection_symmetry(k, theta, a):
    from bogorad.condensate import CondensateParams

    p = NATURAL
    up = integrate_closed_uniform_acceleration(make_mode(p, k, theta), a)
    down = integrate_closed_uniform_acceleration(make_mode(p, k, math.pi - theta), a)
    assert abs(up.value + down.value) <= 1e-12 * abs(up.value) + 1e-300


# -- constant velocity -------------------------------------------------------------------


@given(st.floats(-2.0, 2.0), st.floats(0.1, 3.0), st.floats(0.0, math.pi))
def test_constant_velocity_tone_matches_quadrature(v, k, theta):
    from bogorad.condensate import CondensateParams

    p = NATURAL
    mode = make_mode(p, k, theta)
    window = Window(-1.0, 2.5)
    closed = integrate_closed_constant_velocity(mode, v, window)
    numeric = integrate_numeric(mode, ConstantVelocity(v), window)
    assert abs(closed.value - numeric.value) <= 1e-10 * max(1.0, abs(closed.value))


def test_constant_velocity_flags_delta(natural):
    mode = make_mode(natural, 1.0, 0.0)
    out = integrate_closed_constant_velocity(mode, 0.5)
    assert out.value == 0 and out.distribution.coefficient == 2 * math.pi
    half = integrate_closed_constant_velocity(mode, 0.5, Window(0.0))
    assert half.distribution.coefficient == math.pi


# -- structure ------------------------------------------------------------------------------


@given(st.floats(-5.0, 5.0))
@settings(max_examples=15)
def test_translation_changes_only_the_phase(offset):
    from bogorad.condensate import CondensateParams

    p = NATURAL
    mode = make_mode(p, 1.4, 0.7)
    base = ExponentialDecay(1.0, 0.8)
    window = Window(-1.0, 3.0)
    a = integrate_numeric(mode, base, window)
    b = integrate_numeric(mode, translate(base, offset), window)
    assert abs(abs(b.value) - abs(a.value)) <= 1e-12 * abs(a.value)


def test_sampled_trajectory_matches_analytic(natural):
    mode = make_mode(natural, 1.0, 0.5)
    t = np.linspace(0.0, 2.0, 2001)
    exact = ExponentialDecay(1.0, 1.0)
    sampled = Sampled(tuple(t), tuple(exact.position(t)))
    window = Window(0.0, 2.0)
    a = integrate_numeric(mode, sampled, window)
    b = integrate_closed_exponential(mode, 1.0, 1.0, window)
    assert rel(a.value, b.value) <= 1e-9
    with pytest.raises(ValueError, match="span"):
        integrate_numeric(mode, sampled, Window(0.0, 3.0))
