import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bogorad.condensate import (
    CondensateParams,
    bogoliubov_frequency,
    derive_scales,
    from_natural,
    make_mode,
    to_natural,
)

positive = st.floats(1e-3, 1e3)


def test_natural_units_fix_sound_speed_and_healing_length(natural):
    assert natural.sound_speed == 1.0
    assert natural.healing_length == 0.5
    assert natural.g * natural.density == 1.0


@given(st.floats(1e-4, 1e3))
def test_dispersion_in_natural_units(k):
    p = CondensateParams.natural(1.0, 0.1)
    assert float(bogoliubov_frequency(p, k)) == pytest.approx(k * math.sqrt(1.0 + k * k / 4.0), rel=1e-14)


@given(st.floats(1e-4, 1e2))
def test_dispersion_splits_into_sound_and_free_parts(k):
    p = CondensateParams.natural(2.0, 0.1)
    mode = make_mode(p, k, 0.3)
    c = p.sound_speed
    assert mode.omega**2 == pytest.approx((c * k) ** 2 + mode.free_frequency**2, rel=1e-13)
    assert mode.omega >= c * k


def test_dispersion_limits(natural):
    assert float(bogoliubov_frequency(natural, 1e-6)) == pytest.approx(1e-6, rel=1e-11)
    k = 1e4
    assert float(bogoliubov_frequency(natural, k)) == pytest.approx(k * k / 2 + 1.0, rel=1e-12)


@given(positive, positive, positive, st.floats(-10.0, 10.0), positive)
def test_round_trip_through_natural_units(mass, g, density, coupling, hbar):
    p = CondensateParams(mass=mass, g=g, density=density, coupling=coupling, hbar=hbar)
    nat, units = to_natural(p)
    assert nat.sound_speed == pytest.approx(1.0, rel=1e-12)
    assert nat.hbar == nat.mass == 1.0
    back = from_natural(nat, units)
    for name in ("mass", "g", "density", "coupling", "hbar"):
        assert getattr(back, name) == pytest.approx(getattr(p, name), rel=1e-12, abs=1e-300)


@given(positive, positive, positive, positive)
def test_frequency_scales_with_units(mass, g, density, hbar):
    p = CondensateParams(mass=mass, g=g, density=density, coupling=0.0, hbar=hbar)
    nat, units = to_natural(p)
    k = 1.7 / units.length
    assert float(bogoliubov_frequency(p, k)) * units.time == pytest.approx(
        float(bogoliubov_frequency(nat, k * units.length)), rel=1e-12)


def test_gas_parameter_uses_born_relation():
    p = CondensateParams(mass=2.0, g=3.0, density=5.0, coupling=0.0, hbar=0.7)
    a_s = 3.0 * 2.0 / (4.0 * math.pi * 0.7**2)
    assert p.scattering_length == pytest.approx(a_s)
    assert p.gas_parameter == pytest.approx(5.0 * a_s**3)
    assert p.is_dilute == (p.gas_parameter < 1e-2)


def test_derived_scales(natural):
    s = derive_scales(natural)
    assert s.units.length == s.units.time == s.units.energy == 1.0


@pytest.mark.parametrize("field, value", [("mass", 0.0), ("g", -1.0), ("density", math.inf), ("hbar", math.nan)])
def test_invalid_parameters_raise(field, value):
    kwargs = dict(mass=1.0, g=1.0, density=1.0, coupling=0.0, hbar=1.0)
    kwargs[field] = value
    with pytest.raises(ValueError, match=field):
        CondensateParams(**kwargs)


def test_box_must_match_density():
    with pytest.raises(ValueError, match="inconsistent"):
        CondensateParams(mass=1.0, g=1.0, density=2.0, coupling=0.0, n_particles=8, box_length=2.0)
    p = CondensateParams.from_box(1.0, 1.0, 8, 2.0, 0.0)
    assert p.density == 1.0 and p.volume == 8.0


def test_mode_geometry(natural):
    m = make_mode(natural, 2.0, math.pi / 2)
    assert m.cos_theta == 0.0 and m.k_z == 0.0
    assert m.k_perp == pytest.approx(2.0)
    r = make_mode(natural, 2.0, 0.4).reflected()
    assert r.theta == pytest.approx(math.pi - 0.4)
    assert r.k_z == pytest.approx(-2.0 * math.cos(0.4))


@given(st.floats(1e-3, 50.0))
def test_bogoliubov_angle_diagonalizes(k):
    p = CondensateParams.natural(1.0, 0.0)
    m = make_mode(p, k, 0.0)
    # tanh(2 phi) = g n / (eps + g n)
    assert math.tanh(2 * m.bogoliubov_angle) == pytest.approx(1.0 / (m.epsilon + 1.0), rel=1e-10)


@pytest.mark.parametrize("k, theta", [(0.0, 0.1), (-1.0, 0.1), (1.0, -0.1), (1.0, 4.0), (math.inf, 0.0)])
def test_invalid_modes_raise(natural, k, theta):
    with pytest.raises(ValueError):
        make_mode(natural, k, theta)


def test_vectorized_dispersion(natural):
    k = np.array([0.1, 1.0, 10.0])
    np.testing.assert_allclose(bogoliubov_frequency(natural, k), k * np.sqrt(1 + k**2 / 4))
