import math

import mpmath
import pytest

from bogorad import specfun
from bogorad.condensate import CondensateParams
from bogorad.spectrum import cherenkov_rate
from bogorad.validate import (
    CheckResult,
    bessel_k1_oracle,
    cherenkov_monte_carlo,
    incomplete_gamma_oracle,
    regulator_comparison,
)


@pytest.mark.parametrize("x", [1e-4, 0.3, 2.0, 40.0])
def test_bessel_oracle_agrees_with_mpmath(x):
    assert bessel_k1_oracle(x) == pytest.approx(float(mpmath.besselk(1, x)), rel=1e-11)


@pytest.mark.parametrize("s, z", [(-0.7j, 1.3j), (0.5 - 2j, 0.8j), (1.5, 3.0)])
def test_incomplete_gamma_oracle_agrees_with_mpmath(s, z):
    expected = complex(mpmath.gammainc(mpmath.mpc(s), 0, mpmath.mpc(z)))
    assert abs(incomplete_gamma_oracle(s, z) - expected) <= 1e-10 * abs(expected)


def test_monte_carlo_oracle_tracks_one_dimensional_rate():
    p = CondensateParams.natural(1.0, 1.0)
    mean, sem = cherenkov_monte_carlo(p, 1.5, 3.0, samples=1_000_000, seed=1)
    assert abs(mean - cherenkov_rate(p, 1.5, 3.0)) <= 4 * sem


def test_monte_carlo_is_seeded():
    p = CondensateParams.natural(1.0, 1.0)
    assert cherenkov_monte_carlo(p, 1.5, 3.0, samples=10_000, seed=5) == cherenkov_monte_carlo(
        p, 1.5, 3.0, samples=10_000, seed=5)


def test_regulator_comparison_reports_both_routes():
    out = regulator_comparison(1.0, True)
    assert set(out) >= {"exact", "separation", "exponential", "gaussian"}
    assert abs(out["exponential"].value - out["exact"].value) <= 0.02 * abs(out["exact"].value)


def test_check_result_lines():
    assert CheckResult("x", True, 1e-10, 1e-9).line().startswith("PASS x")
    assert CheckResult("x", False, 1.0, 1e-9).line().startswith("FAIL x")
    assert CheckResult("x", True, 1.0, 1e-9, diagnostic=True).line().startswith("INFO x")
