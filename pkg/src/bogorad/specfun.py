"""Special functions needed by the closed-form phase integrals.

* ``log_gamma``: complex log-Gamma (Lanczos g=7, reflection for Re z < 1/2).
* ``lower_incomplete_gamma``: gamma(s, z) for complex s and z, power series
  near the origin and a Lentz continued fraction for Gamma(s, z) elsewhere.
  For Re s <= 0 the series *is* the analytic continuation, which is exactly
  the regularized object needed when s lies on the imaginary axis.
* ``bessel_k1``: K_1 on the positive reals, ascending series for x <= 2 and
  Steed's continued fraction (CF2) above.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.special import zeta

__all__ = [
    "GammaPoleError",
    "IncompleteGammaError",
    "log_gamma",
    "gamma",
    "lower_incomplete_gamma",
    "upper_incomplete_gamma",
    "incomplete_gamma_terms",
    "bessel_k0",
    "bessel_k1",
    "bessel_k1e",
]

_EPS = np.finfo(float).eps
_EULER = 0.57721566490153286061

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
# (-1)^k zeta(k) / k for the Taylor series of log Gamma(1 + s)
_LOG_GAMMA1P = tuple((-1) ** k * float(zeta(k)) / k for k in range(2, 42))
_SMALL_S = 0.25


class GammaPoleError(ValueError):
    """Argument hit a pole of Gamma (a non-positive integer)."""

    def __init__(self, z):
        super().__init__(f"Gamma has a pole at z = {z}")
        self.z = z


class IncompleteGammaError(ArithmeticError):
    def __init__(self, method: str, residual: float, s, z):
        super().__init__(
            f"incomplete gamma did not converge ({method}, residual {residual:.3e}) at s={s}, z={z}"
        )
        self.method = method
        self.residual = residual


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 1/2
    z = z - 1.0
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(x)


def _log_sin_pi(z: complex) -> complex:
    """log(sin(pi z)), stable for large |Im z| (branch chosen for continuity, not principal)."""
    if abs(z.imag) < 20.0:
        return complex(np.log(np.sin(math.pi * z)))
    if z.imag > 0:
        # sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        return complex(np.log(0.5j) - 1j * math.pi * z + np.log1p(-np.exp(2j * math.pi * z)))
    return _log_sin_pi(z.conjugate()).conjugate()


def _log_gamma_scalar(z: complex) -> complex:
    if _is_pole(z):
        raise GammaPoleError(z)
    if z.real < 0.5:
        return complex(math.log(math.pi) - _log_sin_pi(z) - _lanczos_log_gamma(1.0 - z))
    return complex(_lanczos_log_gamma(z))


def log_gamma(z):
    """Complex log Gamma; ``exp(log_gamma(z)) == Gamma(z)``.

    Accepts scalars or arrays.  Raises :class:`GammaPoleError` at 0, -1, -2, ...
    """
    arr = np.asarray(z, dtype=complex)
    if arr.ndim == 0:
        return _log_gamma_scalar(complex(arr))
    out = np.empty(arr.shape, dtype=complex)
    for idx, value in np.ndenumerate(arr):
        out[idx] = _log_gamma_scalar(complex(value))
    return out


def gamma(z):
    return np.exp(log_gamma(z))


def _series_sum(s: complex, z: complex, max_terms: int = 2000) -> complex:
    # gamma(s, z) = z^s e^{-z} sum_n z^n / (s (s+1) ... (s+n))
    term = 1.0 / s
    total = term
    for n in range(1, max_terms):
        term *= z / (s + n)
        total += term
        if abs(term) < _EPS * abs(total):
            return total
    raise IncompleteGammaError("power series", abs(term / total), s, z)


def _continued_fraction_sum(s: complex, z: complex, max_iter: int = 5000) -> complex:
    # Gamma(s, z) = e^{-z} z^s / (z + 1 - s - 1(1-s)/(z + 3 - s - 2(2-s)/(...)))
    tiny = 1e-300
    b = z + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    delta = 0.0
    for i in range(1, max_iter):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise IncompleteGammaError("continued fraction", abs(delta - 1.0), s, z)


def _use_series(s: complex, z: complex) -> bool:
    return abs(z) < abs(s) + 4.0 or (z.real < 0 and z.imag == 0)


def incomplete_gamma_terms(s, z) -> tuple[int, complex]:
    """Split gamma(s, z) = m Gamma(s) + z^s e^{-z} h without forming either product.

    Returns ``(m, h)`` with m in {0, 1}.  Callers that multiply by a large or
    small factor such as z^{-s} can then combine exponents before exponentiating.
    """
    s = complex(s)
    z = complex(z)
    if _is_pole(s):
        raise GammaPoleError(s)
    if z == 0:
        raise ValueError("z = 0 has no series/continued-fraction split")
    if _use_series(s, z):
        return 0, complex(_series_sum(s, z))
    return 1, complex(-_continued_fraction_sum(s, z))


def _expm1_ratio(w: complex) -> complex:
    """(e^w - 1)/w, accurate as w -> 0."""
    if abs(w) < 0.5:
        total, term = 1.0 + 0j, 1.0 + 0j
        for n in range(2, 18):
            term *= w / n
            total += term
        return total
    return (np.exp(w) - 1.0) / w


def _upper_near_zero(s: complex, z: complex) -> complex:
    # Gamma(s) - z^s/s = [(Gamma(1+s) - 1) - (z^s - 1)]/s, then the n >= 1 series terms;
    # both Gamma(s) and gamma(s, z) are ~1/s here, so the direct difference cancels
    log_gamma1p_over_s = -_EULER + sum(c * s ** (k + 1) for k, c in enumerate(_LOG_GAMMA1P))
    log_z = complex(np.log(z))
    head = (log_gamma1p_over_s * _expm1_ratio(s * log_gamma1p_over_s)
            - log_z * _expm1_ratio(s * log_z))
    term = 1.0 + 0j
    total = 0j
    for n in range(1, 2000):
        term *= -z / n
        piece = term / (s + n)
        total += piece
        if abs(piece) < _EPS * max(abs(total), abs(head)):
            break
    else:
        raise IncompleteGammaError("small-s series", abs(piece), s, z)
    return complex(head - np.exp(s * log_z) * total)


def upper_incomplete_gamma(s, z) -> complex:
    """Gamma(s, z) = Gamma(s) - gamma(s, z)."""
    s = complex(s)
    z = complex(z)
    if z != 0 and not _use_series(s, z):
        return complex(np.exp(s * np.log(z) - z) * _continued_fraction_sum(s, z))
    if z != 0 and abs(s) < _SMALL_S:
        if _is_pole(s):
            raise GammaPoleError(s)
        return _upper_near_zero(s, z)
    return complex(gamma(s) - lower_incomplete_gamma(s, z))


def lower_incomplete_gamma(s, z) -> complex:
    """gamma(s, z) = int_0^z u^{s-1} e^{-u} du along the straight ray from 0.

    For Re s <= 0 the integral diverges at the origin and the value returned is
    its analytic continuation in s (the series representation).
    """
    s = complex(s)
    z = complex(z)
    if _is_pole(s):
        raise GammaPoleError(s)
    if z == 0:
        if s.real > 0:
            return 0j
        raise ValueError(f"gamma(s, 0) is undefined for Re s <= 0 (s = {s})")
    m, h = incomplete_gamma_terms(s, z)
    tail = np.exp(s * np.log(z) - z) * h
    return complex(gamma(s) + tail if m else tail)


# --------------------------------------------------------------------------
# Modified Bessel functions of the second kind

def _k01_series(x):
    # ascending series, x <= 2
    y = 0.25 * x * x
    log_half = np.log(0.5 * x)
    term = np.ones_like(x)
    i0 = np.zeros_like(x)
    i1 = np.zeros_like(x)
    k0_sum = np.zeros_like(x)
    k1_sum = np.zeros_like(x)
    harmonic = 0.0
    for k in range(0, 30):
        if k > 0:
            term = term * y / (k * k)
            harmonic += 1.0 / k
        # term = y^k / (k!)^2
        i0 = i0 + term
        t1 = term / (k + 1)  # y^k / (k! (k+1)!)
        i1 = i1 + t1
        k0_sum = k0_sum + harmonic * term
        psi_sum = 2.0 * (-_EULER) + 2.0 * harmonic + 1.0 / (k + 1)
        k1_sum = k1_sum + psi_sum * t1
    i1 = 0.5 * x * i1
    k0 = -(log_half + _EULER) * i0 + k0_sum
    k1 = 1.0 / x + log_half * i1 - 0.25 * x * k1_sum
    return k0, k1


def _k01_scaled_cf2(x):
    # Steed's CF2 for nu = 0; returns e^x K0(x), e^x K1(x); x >= 2
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d.copy()
    delh = d.copy()
    q1 = np.zeros_like(x)
    q2 = np.ones_like(x)
    a1 = 0.25
    q = np.full_like(x, a1)
    c = a1
    a = -a1
    s = 1.0 + q * delh
    done = np.zeros(x.shape, dtype=bool)
    for i in range(2, 10000):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q = q + c * qnew
        b = b + 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h = np.where(done, h, h + delh)
        dels = q * delh
        s = np.where(done, s, s + dels)
        done |= np.abs(dels) < _EPS * np.abs(s)
        if done.all():
            break
    else:  # pragma: no cover - CF2 converges in a few dozen steps for x >= 2
        raise ArithmeticError("Bessel K continued fraction did not converge")
    h = a1 * h
    k0e = np.sqrt(np.pi / (2.0 * x)) / s
    k1e = k0e * (x + 0.5 - h) / x
    return k0e, k1e


def _k01_scaled(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise ValueError("modified Bessel K requires x > 0")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    k0e = np.empty_like(x)
    k1e = np.empty_like(x)
    small = x <= 2.0
    if small.any():
        k0, k1 = _k01_series(x[small])
        k0e[small] = k0 * np.exp(x[small])
        k1e[small] = k1 * np.exp(x[small])
    if (~small).any():
        k0e[~small], k1e[~small] = _k01_scaled_cf2(x[~small])
    if scalar:
        return k0e[0], k1e[0]
    return k0e, k1e


def _unscale(x, scaled):
    x = np.asarray(x, dtype=float)
    with np.errstate(under="ignore"):
        out = scaled * np.exp(-x)
    return float(out) if np.ndim(out) == 0 else out


def bessel_k1e(x):
    """exp(x) K_1(x), x > 0."""
    return _k01_scaled(x)[1]


def bessel_k1(x):
    """K_1(x) for x > 0; underflows to 0 for x beyond ~705."""
    return _unscale(x, _k01_scaled(x)[1])


def bessel_k0(x):
    return _unscale(x, _k01_scaled(x)[0])
