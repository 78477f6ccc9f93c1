"""Oracle suite behind ``bogorad validate``.

Every check compares an implementation route against something independent:
a special-function identity, a scipy quadrature of a defining integral, a
closed form, a Monte Carlo estimate, or a fitted asymptotic law.  Checks
marked ``diagnostic`` report a measurement but never fail the run.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import specfun
from .condensate import CondensateParams, make_mode
from .phase_integral import (
    RegulatorConvergenceError,
    RegulatorSpec,
    Window,
    integrate_closed_exponential,
    integrate_closed_uniform_acceleration,
    integrate_numeric,
)
from .spectrum import (
    angle_integrated_energy,
    cherenkov_rate,
    envelope_exponent,
    exponential_spectrum,
    exponential_spectrum_windowed,
    fit_gaussian_slope,
    fit_power_law,
    law_exponential_ir,
    total_energy,
)
from .trajectory import ExponentialDecay, UniformAccelerationRel

__all__ = [
    "CheckResult",
    "run_validation",
    "incomplete_gamma_oracle",
    "bessel_k1_oracle",
    "cherenkov_monte_carlo",
    "regulator_comparison",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""
    diagnostic: bool = False

    def line(self) -> str:
        tag = "INFO" if self.diagnostic else ("PASS" if self.passed else "FAIL")
        text = f"{tag} {self.name}: measured {self.measured:.3e} (tolerance {self.tolerance:.1e})"
        return text + (f" {self.detail}" if self.detail else "")


def _natural():
    return CondensateParams.natural(density=1.0, coupling=1.0)


def _rel(a, b) -> float:
    return abs(a - b) / abs(b)


# --------------------------------------------------------------------------
# independent oracles


def incomplete_gamma_oracle(s: complex, z: complex) -> complex:
    """gamma(s, z) by scipy quadrature along the straight ray 0 -> z.

    Written as z^s [int_0^1 tau^{s-1} (e^{-z tau} - 1) dtau + 1/s], which is the
    analytic continuation for Re s > -1 and removes the endpoint singularity.
    """
    s = complex(s)
    z = complex(z)

    def f(tau):
        return tau ** (s - 1) * (cmath.exp(-z * tau) - 1.0)

    re = integrate.quad(lambda x: f(x).real, 0.0, 1.0, epsabs=1e-15, epsrel=1e-13, limit=500)[0]
    im = integrate.quad(lambda x: f(x).imag, 0.0, 1.0, epsabs=1e-15, epsrel=1e-13, limit=500)[0]
    return cmath.exp(s * cmath.log(z)) * (complex(re, im) + 1.0 / s)


def bessel_k1_oracle(x: float) -> float:
    """K_1(x) = int_0^inf exp(-x cosh t) cosh t dt, by scipy quadrature."""
    upper = math.acosh(max(1.0, 750.0 / x)) + 5.0
    return integrate.quad(lambda t: math.exp(-x * math.cosh(t)) * math.cosh(t), 0.0, upper,
                          epsabs=0.0, epsrel=1e-13, limit=500)[0]


def cherenkov_monte_carlo(params: CondensateParams, v: float, k_max: float, samples: int = 4_000_000,
                          width: float = 0.01, seed: int = 0, chunk: int = 500_000):
    """Brute-force 3D estimate of the Cherenkov rate with a Gaussian-broadened delta.

    Returns (mean, standard error).  Sampling is uniform in the cube [-k_max, k_max]^3.
    """
    rng = np.random.default_rng(seed)
    c = params.sound_speed
    xi = params.healing_length
    cube = (2.0 * k_max) ** 3
    pref = params.density * params.coupling**2 / params.hbar**2 / (2.0 * math.pi) ** 3
    values = []
    for start in range(0, samples, chunk):
        n = min(chunk, samples - start)
        x = rng.uniform(-k_max, k_max, (n, 3))
        k2 = np.einsum("ij,ij->i", x, x)
        k = np.sqrt(k2)
        omega = c * k * np.sqrt(1.0 + k2 * xi * xi)
        eps = params.hbar**2 * k2 / (2.0 * params.mass)
        delta = np.exp(-0.5 * ((omega - x[:, 2] * v) / width) ** 2) / (width * math.sqrt(2.0 * math.pi))
        values.append(np.where(k2 <= k_max**2, pref * eps * 2.0 * math.pi * delta * cube, 0.0))
    f = np.concatenate(values)
    return float(f.mean()), float(f.std() / math.sqrt(f.size))


def regulator_comparison(omega_over_rate: float, upper: bool, ladder=(0.2, 0.1, 0.05), order: int = 2):
    """Exponential- vs gaussian-regulated extrapolations on the exponential full line.

    The ladder is in units of Gamma_0.  Returns a dict with both values, their
    error bars, and the separation in units of the combined error (None when a
    ladder refuses to extrapolate).
    """
    params = _natural()
    mode = make_mode(params, 1.0, math.acos(0.7 if upper else -0.7))
    rate = mode.omega / omega_over_rate
    traj = ExponentialDecay(1.0, rate)
    out = {}
    for kind in ("exponential", "gaussian"):
        spec = RegulatorSpec(kind=kind, ladder=tuple(e * rate for e in ladder), order=order, relative=False)
        try:
            out[kind] = integrate_numeric(mode, traj, Window(), spec)
        except RegulatorConvergenceError as exc:
            out[kind] = exc
    exact = integrate_closed_exponential(mode, 1.0, rate)
    ok = all(not isinstance(v, Exception) for v in out.values())
    sep = None
    if ok:
        diff = abs(out["exponential"].value - out["gaussian"].value)
        sep = diff / (out["exponential"].error + out["gaussian"].error)
    return {"exact": exact, "separation": sep, **out}


# --------------------------------------------------------------------------
# checks


def _check_gamma_reflection():
    xs = np.linspace(0.05, 20.0, 200)
    err = max(abs(abs(specfun.gamma(1j * x)) ** 2 * x * math.sinh(math.pi * x) / math.pi - 1.0) for x in xs)
    return CheckResult("gamma_reflection", err <= 1e-9, err, 1e-9)


def _check_gamma_factorial():
    err = max(abs(specfun.log_gamma(n + 1.0) - math.log(math.factorial(n))) / max(1.0, math.log(math.factorial(n)))
              for n in range(1, 30))
    return CheckResult("log_gamma_factorial", err <= 1e-12, err, 1e-12)


def _check_bessel(perturbation: float):
    xs = [1e-6, 1e-3, 0.1, 0.5, 1.0, 1.9, 2.1, 5.0, 10.0, 50.0, 200.0]
    err = max(_rel(specfun.bessel_k1(x) * (1.0 + perturbation), bessel_k1_oracle(x)) for x in xs)
    return CheckResult("bessel_k1_integral", err <= 1e-9, err, 1e-9)


def _check_bessel_recurrence(perturbation: float):
    # K_0 + K_2 = -2 K_1'  with  K_2 = K_0 + 2 K_1 / x
    def k1(x):
        return specfun.bessel_k1(x) * (1.0 + perturbation)

    err = 0.0
    for x in (0.3, 1.0, 3.0, 8.0):
        h = 1e-4 * x
        deriv = (k1(x + h) - k1(x - h)) / (2 * h)
        k0 = specfun.bessel_k0(x)
        lhs = k0 + k0 + 2.0 * k1(x) / x
        err = max(err, _rel(lhs, -2.0 * deriv))
    return CheckResult("bessel_recurrence", err <= 1e-6, err, 1e-6)


def _check_incomplete_gamma():
    points = [(-0.7j, 1.3j), (0.5 - 2j, 0.8j), (-0.2j, -3.0j), (1.5, 2.0 + 1j), (0.3 + 0.5j, 6.0j)]
    err = max(_rel(specfun.lower_incomplete_gamma(s, z), incomplete_gamma_oracle(s, z)) for s, z in points)
    return CheckResult("incomplete_gamma_quadrature", err <= 1e-9, err, 1e-9)


def _check_incomplete_gamma_recurrence():
    err = 0.0
    for s, z in [(-0.7j, 1.3j), (0.5 - 2j, 0.8j), (-1.1j, 9.0j), (2.5, 3.0)]:
        lhs = specfun.lower_incomplete_gamma(s + 1, z)
        rhs = s * specfun.lower_incomplete_gamma(s, z) - cmath.exp(s * cmath.log(z) - z)
        err = max(err, _rel(lhs, rhs))
    return CheckResult("incomplete_gamma_recurrence", err <= 1e-9, err, 1e-9)


def _check_exponential_window():
    params = _natural()
    err = 0.0
    for ratio in (0.2, 1.0, 5.0):
        for kz in (-3.0, -0.5, 1.0, 3.0):
            mode = make_mode(params, 1.0, math.acos(0.6 if kz > 0 else -0.6))
            zeta0 = kz / mode.k_z
            rate = mode.omega / ratio
            for window in (Window(0.0, 3.0 / rate), Window(-2.0 / rate, 4.0 / rate)):
                closed = integrate_closed_exponential(mode, zeta0, rate, window).value
                numeric = integrate_numeric(mode, ExponentialDecay(zeta0, rate), window).value
                err = max(err, _rel(numeric, closed))
    return CheckResult("exponential_window_quadrature", err <= 1e-6, err, 1e-6)


def _planck(omega, rate, upper):
    x = 2.0 * math.pi * omega / rate
    return 2.0 * math.pi / (omega * rate) / (math.expm1(x) if upper else -math.expm1(-x))


def _check_planck():
    params = _natural()
    err = 0.0
    for ratio in (0.1, 1.0, 5.0):
        for upper in (True, False):
            mode = make_mode(params, 1.0, math.acos(0.7 if upper else -0.7))
            rate = mode.omega / ratio
            value = integrate_numeric(mode, ExponentialDecay(1.0, rate), Window(), RegulatorSpec())
            err = max(err, abs(value.abs2 / _planck(mode.omega, rate, upper) - 1.0))
    return CheckResult("planck_full_line", err <= 1e-2, err, 1e-2)


def _check_hemispheres():
    params = _natural()
    err_ratio = err_diff = 0.0
    for k in (0.3, 1.0, 3.0):
        for rate in (0.5, 1.0, 4.0):
            up = make_mode(params, k, 0.4)
            low = up.reflected()
            iu = integrate_closed_exponential(up, 1.0, rate).abs2
            il = integrate_closed_exponential(low, 1.0, rate).abs2
            err_ratio = max(err_ratio, abs(iu / il / math.exp(-2 * math.pi * up.omega / rate) - 1.0))
            target = 2 * math.pi / (up.omega * rate)
            err_diff = max(err_diff, abs((il - iu) / target - 1.0))
    err = max(err_ratio, err_diff)
    return CheckResult("hemisphere_identities", err <= 1e-9, err, 1e-9,
                       f"ratio {err_ratio:.1e} difference {err_diff:.1e}")


def _check_uniform_acceleration():
    params = _natural()
    err = 0.0
    for k in (0.5, 1.0, 2.0):
        for theta in (0.3, 1.2, 2.6):
            mode = make_mode(params, k, theta)
            closed = integrate_closed_uniform_acceleration(mode, 1.0).value
            numeric = integrate_numeric(mode, UniformAccelerationRel(1.0), Window(), RegulatorSpec()).value
            err = max(err, _rel(numeric, closed))
    zero = integrate_closed_uniform_acceleration(make_mode(params, 1.0, math.pi / 2), 1.0).value
    passed = err <= 1e-5 and zero == 0
    return CheckResult("uniform_acceleration_quadrature", passed, err, 1e-5, f"theta=pi/2 value {abs(zero):.1e}")


def _check_ir_exponent():
    params = _natural()
    k = np.geomspace(1e-4, 1e-2, 9)
    p, coef = fit_power_law(k, [exponential_spectrum(params, 1.0, x, 0.5).dn_dk_domega for x in k])
    return CheckResult("full_line_ir_exponent", abs(p - 1.0) <= 0.03, abs(p - 1.0), 0.03, f"exponent {p:.4f}")


def _check_ir_coefficient():
    params = _natural()
    k = np.geomspace(1e-5, 1e-3, 9)
    dn = [0.5 * (exponential_spectrum(params, 1.0, x, 0.5).dn_dk_domega
                 + exponential_spectrum(params, 1.0, x, math.pi - 0.5).dn_dk_domega) for x in k]
    ratio = float(np.mean(np.array(dn) / law_exponential_ir(params, k)))
    return CheckResult("full_line_ir_coefficient", True, ratio, 0.05,
                       "ratio to lambda^2/(2 g hbar c); normalization differs by (2 pi)^3", diagnostic=True)


def _check_window_exponent():
    params = _natural()
    k = np.geomspace(1e-4, 1e-2, 9)
    dn = [exponential_spectrum_windowed(params, 1.0, 1.0, Window(0.0, 1.0), x, 0.5).dn_dk_domega for x in k]
    p, _ = fit_power_law(k, dn)
    return CheckResult("window_ir_exponent", abs(p - 3.0) <= 0.05, abs(p - 3.0), 0.05, f"exponent {p:.4f}")


def _check_window_envelope():
    params = _natural()
    k = np.linspace(20.0, 200.0, 4000)
    dn = [exponential_spectrum_windowed(params, 1.0, 1.0, Window(0.0, 1.0), x, 0.5).dn_dk_domega for x in k]
    p, _ = envelope_exponent(k, dn)
    return CheckResult("window_uv_envelope", abs(p + 2.0) <= 0.1, abs(p + 2.0), 0.1, f"exponent {p:.4f}")


def _check_acceleration_uv():
    params = _natural()
    a = 1.0
    k = np.linspace(6.0, 12.0, 13)
    slope = fit_gaussian_slope(k, angle_integrated_energy(params, UniformAccelerationRel(a), k))
    target = -params.hbar * params.sound_speed / (params.mass * a)
    err = abs(slope / target - 1.0)
    return CheckResult("acceleration_uv_slope", err <= 0.02, err, 0.02, f"slope {slope:.5f}")


def _check_landau(seed: int):
    params = _natural()
    subsonic = [cherenkov_rate(params, v, 3.0) for v in (0.0, 0.3, 0.9, 1.0)]
    supersonic = [cherenkov_rate(params, v, 3.0) for v in (1.2, 1.5, 2.0)]
    mean, sem = cherenkov_monte_carlo(params, 1.5, 3.0, seed=seed)
    sigma = abs(mean - supersonic[1]) / sem
    passed = (all(r == 0 for r in subsonic) and all(r > 0 for r in supersonic)
              and supersonic[0] < supersonic[1] < supersonic[2] and sigma <= 3.0)
    return CheckResult("landau_criterion", passed, sigma, 3.0, "Monte Carlo deviation in standard errors")


def _check_weak_acceleration():
    params = _natural()
    a = 1e-3
    e1 = total_energy(params, UniformAccelerationRel(a), k_max=math.sqrt(80 * a)).total
    e4 = total_energy(params, UniformAccelerationRel(4 * a), k_max=math.sqrt(320 * a)).total
    err = abs(e4 / e1 / 2.0 - 1.0)
    return CheckResult("weak_acceleration_scaling", err <= 0.05, err, 0.05, f"ratio {e4 / e1:.5f}")


def _check_divergence():
    params = _natural()
    traj = ExponentialDecay(1.0, 1.0)
    r10 = total_energy(params, traj, k_max=10.0)
    r20 = total_energy(params, traj, k_max=20.0)
    upper_change = abs(r20.upper - r10.upper) / r10.upper
    passed = r10.divergent_lower and not r10.divergent_upper and upper_change <= 1e-6
    return CheckResult("uv_divergence_flag", passed, upper_change, 1e-6, "upper-hemisphere change under k_max doubling")


def _check_regulator_dependence():
    seps, refused = [], 0
    for ratio in (0.2, 1.0, 3.0):
        for upper in (True, False):
            sep = regulator_comparison(ratio, upper)["separation"]
            if sep is None:
                refused += 1
            else:
                seps.append(sep)
    worst = max(seps) if seps else 0.0
    return CheckResult("regulator_dependence", worst > 1.0, worst, 1.0,
                       f"largest gaussian/exponential separation in combined error bars; "
                       f"{refused} ladder(s) refused to extrapolate")


def run_validation(k1_perturbation: float = 0.0, seed: int = 0) -> list[CheckResult]:
    """Run every check; ``k1_perturbation`` scales K_1 by (1 + p) as a sensitivity canary."""
    return [
        _check_gamma_reflection(),
        _check_gamma_factorial(),
        _check_bessel(k1_perturbation),
        _check_bessel_recurrence(k1_perturbation),
        _check_incomplete_gamma(),
        _check_incomplete_gamma_recurrence(),
        _check_exponential_window(),
        _check_planck(),
        _check_hemispheres(),
        _check_uniform_acceleration(),
        _check_ir_exponent(),
        _check_ir_coefficient(),
        _check_window_exponent(),
        _check_window_envelope(),
        _check_acceleration_uv(),
        _check_landau(seed),
        _check_weak_acceleration(),
        _check_divergence(),
        _check_regulator_dependence(),
    ]
