"""Occupation densities, radiated energy and depletion from phase integrals.

Densities are per dk per dOmega in the thermodynamic limit:

    dn/dk dOmega = (n lambda^2 / hbar^3) (eps_k / omega_k) |I_k|^2 k^2 / (2 pi)^3

and dE/dk dOmega = hbar omega_k dn/dk dOmega.  All functions are unit
covariant; the CLI feeds them natural-unit parameters.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .condensate import CondensateParams, Mode, make_mode
from .phase_integral import (
    CLOSED_FORM,
    NUMERIC,
    PhaseIntegral,
    RegulatorSpec,
    Window,
    integrate_closed_constant_velocity,
    integrate_closed_exponential,
    integrate_closed_uniform_acceleration,
    integrate_numeric,
)
from .specfun import bessel_k1
from .trajectory import ConstantVelocity, ExponentialDecay, Trajectory, Translated, UniformAccelerationRel

__all__ = [
    "SpectrumPoint",
    "EnergyReport",
    "DepletionReport",
    "EnergyGrid",
    "phase_integral",
    "occupation_density",
    "spectrum_point",
    "exponential_spectrum",
    "exponential_spectrum_windowed",
    "uniform_acceleration_spectrum",
    "angle_integrated_energy",
    "total_energy",
    "cherenkov_rate",
    "depletion",
    "fit_power_law",
    "fit_gaussian_slope",
    "envelope_exponent",
    "law_exponential_ir",
    "law_exponential_uv",
    "law_windowed_ir",
    "law_windowed_uv",
    "law_acceleration_ir",
    "law_acceleration_uv",
    "law_acceleration_energy_uv",
    "weak_acceleration_energy",
]

_KNOWN_DISTRIBUTIONS = ("delta(omega_k)", "delta(mu_k)", "delta(omega_k - k_z v)")


@dataclass(frozen=True)
class SpectrumPoint:
    k: float
    theta: float
    omega: float
    dn_dk_domega: float
    dE_dk_domega: float
    provenance: str

    def __post_init__(self):
        if not self.dn_dk_domega >= 0:
            raise ValueError(f"negative occupation density {self.dn_dk_domega!r}")
        if self.provenance not in ("numeric", "closed_form", "asymptotic"):
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass(frozen=True)
class EnergyReport:
    total: float
    upper: float
    lower: float
    k_max: float
    truncation_error: float
    divergent: bool
    divergent_upper: bool = False
    divergent_lower: bool = False
    tail_exponent_upper: float | None = None
    tail_exponent_lower: float | None = None


@dataclass(frozen=True)
class DepletionReport:
    leading: float
    correction: float
    n_modes: int
    box_length: float
    n_particles: int
    tail_estimate: float
    grid_error: float

    @property
    def total(self) -> float:
        return self.leading + self.correction


@dataclass(frozen=True)
class EnergyGrid:
    """Composite Gauss-Legendre layout for the (k, cos theta) quadrature.

    k uses ``k_panels`` geometric panels between ``k_max * k_floor`` and ``k_max``
    (plus one panel down to 0); each hemisphere in cos theta uses
    ``angle_panels`` geometric panels in 1 - |cos theta| down to ``angle_floor``.
    """

    k_panels: int = 40
    k_order: int = 10
    k_floor: float = 1e-7
    angle_panels: int = 14
    angle_order: int = 8
    angle_floor: float = 1e-10

    def __post_init__(self):
        for name in ("k_panels", "k_order", "angle_panels", "angle_order"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if not (0 < self.k_floor < 1 and 0 < self.angle_floor < 1):
            raise ValueError("k_floor and angle_floor must lie in (0, 1)")

    def coarsened(self) -> "EnergyGrid":
        return EnergyGrid(
            k_panels=max(1, self.k_panels // 2),
            k_order=max(2, self.k_order // 2 + 1),
            k_floor=self.k_floor,
            angle_panels=max(1, self.angle_panels // 2),
            angle_order=max(2, self.angle_order // 2 + 1),
            angle_floor=self.angle_floor,
        )


# --------------------------------------------------------------------------
# phase integral dispatch and the occupation density


def _unwrap(traj: Trajectory) -> Trajectory:
    # |I_k| is blind to rigid translations
    while isinstance(traj, Translated):
        traj = traj.base
    return traj


def phase_integral(mode: Mode, traj: Trajectory, window: Window = Window(),
                   reg: RegulatorSpec | None = None, source: str = "auto", tol: float = 1e-11) -> PhaseIntegral:
    """I_k for one mode, from a closed form when one exists (``source="auto"``)."""
    if source not in ("auto", "numeric", "closed"):
        raise ValueError(f"unknown integral source {source!r}")
    base = _unwrap(traj)
    if source != "numeric":
        if isinstance(base, ExponentialDecay):
            return integrate_closed_exponential(mode, base.zeta0, base.rate, window)
        if isinstance(base, UniformAccelerationRel) and window.is_full_line:
            return integrate_closed_uniform_acceleration(mode, base.a, base.sound_speed)
        if isinstance(base, ConstantVelocity):
            return integrate_closed_constant_velocity(mode, base.v, window)
        if source == "closed":
            raise ValueError(f"no closed form for {type(base).__name__} on window {window}")
    if not window.is_finite and reg is None:
        reg = RegulatorSpec()
    return integrate_numeric(mode, traj, window, reg, tol=tol)


def _prefactor(params: CondensateParams, k, omega):
    eps = params.hbar**2 * np.square(k) / (2.0 * params.mass)
    return params.density * params.coupling**2 * eps / (params.hbar**3 * omega) * np.square(k) / (2.0 * math.pi) ** 3


def occupation_density(params: CondensateParams, mode: Mode, integral: PhaseIntegral) -> SpectrumPoint:
    """dn/dk dOmega and dE/dk dOmega for one mode.

    Distributional pieces flagged on the integral are dropped: each multiplies
    a delta whose support is excluded by the eps_k/omega_k weight or lies on
    a measure-zero set of the (k, theta) grid.
    """
    if integral.mode_key is not None and integral.mode_key != (mode.k, mode.theta):
        raise ValueError(f"phase integral belongs to mode {integral.mode_key}, not {(mode.k, mode.theta)}")
    if integral.distribution is not None and integral.distribution.name not in _KNOWN_DISTRIBUTIONS:
        raise ValueError(f"unknown distributional term {integral.distribution.name!r}")
    dn = float(_prefactor(params, mode.k, mode.omega)) * integral.abs2
    numeric = integral.provenance == NUMERIC or bool(integral.ladder)
    return SpectrumPoint(
        k=mode.k,
        theta=mode.theta,
        omega=mode.omega,
        dn_dk_domega=dn,
        dE_dk_domega=params.hbar * mode.omega * dn,
        provenance="numeric" if numeric else CLOSED_FORM,
    )


def spectrum_point(params, traj, k, theta, window=Window(), reg=None, source="auto") -> SpectrumPoint:
    mode = make_mode(params, k, theta)
    return occupation_density(params, mode, phase_integral(mode, traj, window, reg, source))


# --------------------------------------------------------------------------
# closed-form spectra


def _planck_abs2(omega, rate, upper):
    x = 2.0 * math.pi * omega / rate
    base = 2.0 * math.pi / (omega * rate)
    if upper:
        return base / np.expm1(x)
    return base / -np.expm1(-x)


def _hemisphere_upper(hemisphere, theta, zeta0=1.0) -> bool | None:
    if hemisphere is None:
        cz = 0.0 if theta == math.pi / 2 else math.cos(theta)
        if cz == 0:
            return None
        return cz * zeta0 > 0
    if hemisphere not in ("upper", "lower"):
        raise ValueError(f"hemisphere must be 'upper' or 'lower', got {hemisphere!r}")
    return hemisphere == "upper"


def exponential_spectrum(params: CondensateParams, rate: float, k: float, theta: float,
                         hemisphere: str | None = None) -> SpectrumPoint:
    """Full-line spectrum for zeta0 exp(-rate t).

    ``hemisphere`` picks the Planck factor ('upper' means k_z zeta0 > 0); when
    omitted it follows the sign of cos theta for zeta0 > 0.  k_z = 0 emits nothing.
    """
    if not rate > 0:
        raise ValueError("rate must be positive")
    mode = make_mode(params, k, theta)
    upper = _hemisphere_upper(hemisphere, theta)
    if upper is None:
        dn = 0.0
    else:
        dn = float(_prefactor(params, k, mode.omega) * _planck_abs2(mode.omega, rate, upper))
    return SpectrumPoint(k, theta, mode.omega, dn, params.hbar * mode.omega * dn, CLOSED_FORM)


def exponential_spectrum_windowed(params: CondensateParams, rate: float, zeta0: float, window: Window,
                                  k: float, theta: float) -> SpectrumPoint:
    mode = make_mode(params, k, theta)
    return occupation_density(params, mode, integrate_closed_exponential(mode, zeta0, rate, window))


def uniform_acceleration_spectrum(params: CondensateParams, a: float, k: float, theta: float) -> SpectrumPoint:
    mode = make_mode(params, k, theta)
    if mode.cos_theta == 0.0:
        return SpectrumPoint(k, theta, mode.omega, 0.0, 0.0, CLOSED_FORM)
    integral = integrate_closed_uniform_acceleration(mode, a, params.sound_speed)
    return occupation_density(params, mode, integral)


def _uniform_acceleration_density(params, a, k, cos):
    """Vectorized dn/dk dOmega for hyperbolic motion (same formula as the K_1 route)."""
    c = params.sound_speed
    xi = params.healing_length
    sin2 = (1.0 - cos) * (1.0 + cos)
    mu = k * c * c / a * np.sqrt(sin2 + (k * xi) ** 2)
    omega = c * k * np.sqrt(1.0 + (k * xi) ** 2)
    with np.errstate(under="ignore"):
        ratio = bessel_k1(mu) / mu
    dn = (2.0 * params.density * params.coupling**2 * c**6 * k**6 * cos**2
          / ((2.0 * math.pi) ** 3 * params.mass * a**4 * params.hbar * omega) * ratio**2)
    return dn, omega


# --------------------------------------------------------------------------
# energy integration


@lru_cache(maxsize=None)
def _gauss_legendre(order: int):
    return np.polynomial.legendre.leggauss(order)


def _composite(breaks, order):
    x, w = _gauss_legendre(order)
    a, b = np.asarray(breaks[:-1]), np.asarray(breaks[1:])
    half = 0.5 * (b - a)
    nodes = (0.5 * (a + b))[:, None] + half[:, None] * x[None, :]
    weights = half[:, None] * w[None, :]
    return nodes.ravel(), weights.ravel()


def _k_rule(k_max, grid: EnergyGrid):
    breaks = np.concatenate([[0.0], np.geomspace(k_max * grid.k_floor, k_max, grid.k_panels + 1)])
    return _composite(breaks, grid.k_order)


def _angle_rule(grid: EnergyGrid, upper: bool):
    # u = 1 - |cos theta|, panels crowd toward the axis where IR peaks live
    breaks = np.concatenate([[0.0], np.geomspace(grid.angle_floor, 1.0, grid.angle_panels + 1)])
    u, w = _composite(breaks, grid.angle_order)
    cos = 1.0 - u if upper else u - 1.0
    return cos, w


def _density_grid(params, traj, window, reg, source, k, cos):
    """dE/dk dOmega on the outer product k x cos."""
    base = _unwrap(traj)
    kk, cc = np.meshgrid(k, cos, indexing="ij")
    if source != "numeric" and isinstance(base, UniformAccelerationRel) and window.is_full_line:
        dn, omega = _uniform_acceleration_density(params, base.a, kk, cc)
        return params.hbar * omega * dn
    if source != "numeric" and isinstance(base, ExponentialDecay) and window.is_full_line:
        omega = params.sound_speed * kk * np.sqrt(1.0 + (kk * params.healing_length) ** 2)
        upper = cc * base.zeta0 > 0
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            abs2 = np.where(upper, _planck_abs2(omega, base.rate, True), _planck_abs2(omega, base.rate, False))
        abs2 = np.where(cc == 0, 0.0, abs2)
        return params.hbar * omega * _prefactor(params, kk, omega) * abs2
    out = np.empty(kk.shape)
    for idx in np.ndindex(kk.shape):
        theta = math.acos(float(np.clip(cc[idx], -1.0, 1.0)))
        out[idx] = spectrum_point(params, traj, float(kk[idx]), theta, window, reg, source).dE_dk_domega
    return out


def angle_integrated_energy(params, traj, k, window=Window(), reg=None, source="auto",
                            grid: EnergyGrid = EnergyGrid(), hemisphere: str | None = None):
    """dE/dk = int dOmega dE/dk dOmega for an array of k (azimuth done analytically)."""
    k = np.atleast_1d(np.asarray(k, dtype=float))
    total = np.zeros_like(k)
    for upper in (True, False):
        if hemisphere is not None and (hemisphere == "upper") != upper:
            continue
        cos, w = _angle_rule(grid, upper)
        total = total + 2.0 * math.pi * (_density_grid(params, traj, window, reg, source, k, cos) @ w)
    return total


def _hemisphere_energy(params, traj, window, reg, source, k_max, grid, upper):
    k, wk = _k_rule(k_max, grid)
    cos, wc = _angle_rule(grid, upper)
    dens = _density_grid(params, traj, window, reg, source, k, cos)
    return 2.0 * math.pi * float(wk @ dens @ wc)


def _tail_exponent(params, traj, window, reg, source, k_max, grid, upper, reference):
    ks = k_max * np.linspace(0.6, 1.0, 5)
    de = angle_integrated_energy(params, traj, ks, window, reg, source, grid, "upper" if upper else "lower")
    if np.all(de == 0):
        return None, False
    if np.any(de <= 0):
        return None, False
    slope = float(np.polyfit(np.log(ks), np.log(de), 1)[0])
    # a tail is only worth flagging if it still carries weight at the cutoff
    significant = de[-1] * k_max > 1e-10 * max(reference, 1e-300)
    return slope, bool(slope > -1.0 and significant)


def total_energy(params: CondensateParams, traj: Trajectory, window: Window = Window(),
                 reg: RegulatorSpec | None = None, k_max: float = 10.0, grid: EnergyGrid = EnergyGrid(),
                 source: str = "auto") -> EnergyReport:
    """E = int dk dOmega dE/dk dOmega up to ``k_max``, per hemisphere.

    The truncation error compares against the same rule on a coarsened grid.
    A tail whose log-log slope at the cutoff is above -1 (so the k integral
    keeps growing with k_max) sets the divergence flag instead of being hidden.
    """
    if not (math.isfinite(k_max) and k_max > 0):
        raise ValueError("k_max must be finite and positive")
    base = _unwrap(traj)
    if isinstance(base, ConstantVelocity) and not window.is_finite:
        if abs(base.v) <= params.sound_speed:
            return EnergyReport(0.0, 0.0, 0.0, k_max, 0.0, False)
        # steady Cherenkov emission: finite rate, infinite total
        return EnergyReport(math.inf, math.inf, math.inf, k_max, math.inf, True, True, True)
    parts, coarse, slopes, flags = [], [], [], []
    for upper in (True, False):
        e = _hemisphere_energy(params, traj, window, reg, source, k_max, grid, upper)
        ec = _hemisphere_energy(params, traj, window, reg, source, k_max, grid.coarsened(), upper)
        slope, flag = _tail_exponent(params, traj, window, reg, source, k_max, grid, upper, e)
        parts.append(e)
        coarse.append(ec)
        slopes.append(slope)
        flags.append(flag)
    upper_e, lower_e = parts
    trunc = abs(upper_e - coarse[0]) + abs(lower_e - coarse[1])
    return EnergyReport(
        total=upper_e + lower_e,
        upper=upper_e,
        lower=lower_e,
        k_max=k_max,
        truncation_error=trunc,
        divergent=any(flags),
        divergent_upper=flags[0],
        divergent_lower=flags[1],
        tail_exponent_upper=slopes[0],
        tail_exponent_lower=slopes[1],
    )


def cherenkov_rate(params: CondensateParams, v: float, k_max: float, order: int = 64) -> float:
    """Energy emitted per unit time by steady motion at speed v.

    The delta(omega_k - k_z v) fixes cos theta = omega_k/(k v); the remaining
    radial integral (n lambda^2 / 2 pi hbar^2 v) int k eps_k dk runs over the
    admissible shell k <= min(k_max, sqrt(v^2/c^2 - 1)/xi).
    """
    if not v >= 0:
        raise ValueError("speed must be non-negative")
    c = params.sound_speed
    if v <= c:
        return 0.0
    k_top = min(k_max, math.sqrt((v / c) ** 2 - 1.0) / params.healing_length)
    x, w = _gauss_legendre(order)
    k = 0.5 * k_top * (x + 1.0)
    eps = params.hbar**2 * k**2 / (2.0 * params.mass)
    radial = 0.5 * k_top * float(w @ (k * eps))
    return params.density * params.coupling**2 / (2.0 * math.pi * params.hbar**2 * v) * radial


# --------------------------------------------------------------------------
# depletion


def _box_shells(box_length: float, k_max: float):
    """Distinct (|k|, theta) classes of box modes with their multiplicities."""
    m = int(math.floor(k_max * box_length / (2.0 * math.pi)))
    r = np.arange(-m, m + 1)
    nx, ny, nz = np.meshgrid(r, r, r, indexing="ij")
    n2 = (nx**2 + ny**2 + nz**2).ravel()
    nz = nz.ravel()
    keep = (n2 > 0) & (n2 * (2.0 * math.pi / box_length) ** 2 <= k_max**2)
    classes, counts = np.unique(np.stack([n2[keep], nz[keep]], axis=1), axis=0, return_counts=True)
    return classes, counts


def _depletion_terms(params, traj, run, reg, source, t, k, theta):
    """N^2 times the summand for one mode; N drops out of phi_k up to 1/sqrt(N)."""
    mode = make_mode(params, k, theta)
    hw = params.hbar * mode.omega
    gn = params.g * params.density
    amp = -1j * params.density * params.coupling / params.hbar * math.sqrt(mode.epsilon / hw)
    phase = np.exp(-1j * mode.omega * t)
    phi_k = amp * phase_integral(mode, traj, run, reg, source).value * phase
    phi_mk = amp * phase_integral(mode.reflected(), traj, run, reg, source).value * phase
    return mode.epsilon / hw * abs(phi_k) ** 2 + gn / (2.0 * hw) * abs(np.conj(phi_k) - phi_mk) ** 2


def depletion(params: CondensateParams, traj: Trajectory, window: Window, t: float | None = None,
              k_max: float = 4.0, reg: RegulatorSpec | None = None, source: str = "auto",
              continuum_order: tuple[int, int] = (48, 24)) -> DepletionReport:
    """Quantum depletion plus the impurity-induced 1/N correction at time t.

    The mode sum runs over box modes k = 2 pi (n_x, n_y, n_z)/L with
    0 < |k| <= k_max; I_k(t) is accumulated over [window.t_i, t].  The same
    sum done as a continuum integral gives the lattice (grid) error, and a
    power-law fit of the outermost shells estimates the part beyond k_max.
    """
    if params.n_particles is None or params.box_length is None:
        raise ValueError("depletion needs both n_particles and box_length")
    t = window.t_f if t is None else t
    if not math.isfinite(t):
        raise ValueError("depletion is evaluated at a finite time t")
    run = Window(window.t_i, t)
    leading = 8.0 / 3.0 * math.sqrt(params.gas_parameter / math.pi)
    N = params.n_particles
    L = params.box_length
    classes, counts = _box_shells(L, k_max)
    if params.coupling == 0 or len(classes) == 0:
        return DepletionReport(leading, 0.0, int(counts.sum()), L, N, 0.0, 0.0)
    unit = 2.0 * math.pi / L
    ks = np.empty(len(classes))
    terms = np.empty(len(classes))
    for i, (n2, nz) in enumerate(classes):
        ks[i] = unit * math.sqrt(n2)
        theta = math.pi / 2 if nz == 0 else math.acos(float(np.clip(nz / math.sqrt(n2), -1.0, 1.0)))
        terms[i] = _depletion_terms(params, traj, run, reg, source, t, ks[i], theta)
    weighted = terms * counts / N**2
    correction = float(np.sum(weighted))

    # continuum version of the same sum: V/(2 pi)^3 int d^3k
    nk, nc = continuum_order
    xk, wk = _gauss_legendre(nk)
    xc, wc = _gauss_legendre(nc)
    kk = 0.5 * k_max * (xk + 1.0)
    integral = 0.0
    for k, w1 in zip(kk, 0.5 * k_max * wk):
        row = sum(w2 * _depletion_terms(params, traj, run, reg, source, t, k, math.acos(c))
                  for c, w2 in zip(xc, wc))
        integral += w1 * k * k * row
    continuum = L**3 / (2.0 * math.pi) ** 3 * 2.0 * math.pi * integral / N**2
    grid_error = abs(correction - continuum)

    tail = 0.0
    edges = np.linspace(0.5 * k_max, k_max, 6)
    centers, sums = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        sel = (ks >= lo) & ((ks < hi) if hi < k_max else (ks <= hi))
        if sel.any() and weighted[sel].sum() > 0:
            centers.append(0.5 * (lo + hi))
            sums.append(weighted[sel].sum() / (hi - lo))
    if len(centers) >= 3:
        p, logc = np.polyfit(np.log(centers), np.log(sums), 1)
        tail = math.inf if p >= -1 else float(math.exp(logc) * k_max ** (p + 1) / (-p - 1))
    return DepletionReport(leading, correction, int(counts.sum()), L, N, tail, grid_error)


# --------------------------------------------------------------------------
# fits and asymptotic laws


def fit_power_law(k, y):
    """Least-squares (exponent, coefficient) of y = C k^p in log-log space."""
    k = np.asarray(k, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(k <= 0) or np.any(y <= 0):
        raise ValueError("power-law fit needs positive data")
    p, logc = np.polyfit(np.log(k), np.log(y), 1)
    return float(p), float(math.exp(logc))


def fit_gaussian_slope(k, y) -> float:
    """Slope of ln y against k^2."""
    k = np.asarray(k, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise ValueError("gaussian fit needs positive data")
    return float(np.polyfit(k**2, np.log(y), 1)[0])


def envelope_exponent(k, y):
    """Power-law exponent of the upper envelope (local maxima) of an oscillating curve."""
    k = np.asarray(k, dtype=float)
    y = np.asarray(y, dtype=float)
    peaks = np.flatnonzero((y[1:-1] > y[:-2]) & (y[1:-1] >= y[2:])) + 1
    if len(peaks) < 3:
        raise ValueError("too few local maxima for an envelope fit")
    return fit_power_law(k[peaks], y[peaks])


def law_exponential_ir(params: CondensateParams, k):
    return params.coupling**2 / (2.0 * params.g * params.hbar * params.sound_speed) * np.asarray(k, dtype=float)


def law_exponential_uv(params: CondensateParams, rate: float, k, upper: bool):
    k = np.asarray(k, dtype=float)
    omega = params.sound_speed * k * np.sqrt(1.0 + (k * params.healing_length) ** 2)
    boltz = np.exp(-2.0 * math.pi * omega / rate)
    pref = 4.0 * math.pi * params.g * params.density**2 * params.coupling**2 / (
        params.hbar**3 * rate * params.sound_speed**2)
    return pref * (boltz if upper else 1.0 + boltz)


def law_windowed_ir(params: CondensateParams, duration: float, k):
    k = np.asarray(k, dtype=float)
    return params.coupling**2 * params.sound_speed * duration**2 / (2.0 * params.g * params.hbar) * k**3


def law_windowed_uv(params: CondensateParams, rate: float, zeta0: float, duration: float, k, theta):
    k = np.asarray(k, dtype=float)
    kz = k * np.cos(theta)
    pref = 4.0 * params.density**3 * params.g**2 * params.coupling**2 / (params.hbar**4 * params.sound_speed**4)
    return pref * (1.0 - np.cos(kz * zeta0 * (1.0 - math.exp(-rate * duration)))) / k**2


def law_acceleration_ir(params: CondensateParams, a: float, k, theta):
    k = np.asarray(k, dtype=float)
    c = params.sound_speed
    cos = np.cos(theta)
    sin2 = np.sin(theta) ** 2
    return (2.0 * params.density * params.coupling**2 * k * cos**2
            / ((2.0 * math.pi) ** 3 * params.mass * c**3 * params.hbar * (sin2 + (k * params.healing_length) ** 2) ** 2))


def law_acceleration_uv(params: CondensateParams, a: float, k, theta):
    k = np.asarray(k, dtype=float)
    c = params.sound_speed
    M = params.mass
    hbar = params.hbar
    return (params.density * params.coupling**2 * (2.0 * M * c) ** 3 * np.cos(theta) ** 2
            / ((2.0 * math.pi) ** 2 * hbar**5 * a * k**2) * np.exp(-hbar * k**2 * c / (M * a)))


def law_acceleration_energy_uv(params: CondensateParams, a: float, k):
    k = np.asarray(k, dtype=float)
    c = params.sound_speed
    M = params.mass
    hbar = params.hbar
    return (4.0 * params.density * params.coupling**2 * M**2 * c**3 / (3.0 * math.pi * hbar**3 * a)
            * np.exp(-hbar * k**2 * c / (M * a)))


def weak_acceleration_energy(params: CondensateParams, a: float) -> float:
    c = params.sound_speed
    M = params.mass
    hbar = params.hbar
    return (params.density * params.coupling**2 * M**2 * c / (10.0 * hbar**3)
            * math.sqrt(hbar * a / (math.pi * M * c**3)))
