"""The phase integral I_k = int dt exp(i omega_k t - i k_z zeta(t)).

Numerical evaluation uses oscillation-aware Gauss-Kronrod panels: breakpoints
are placed so that every panel spans at most a quarter turn of the local
phase, then panels are bisected until the embedded 7/15-point error estimate
meets the tolerance.  Infinite endpoints are cut where the integrand has
become asymptotic and the remaining tail is added by repeated integration by
parts; non-decaying tails need a regulator and an epsilon -> 0 extrapolation.

Closed forms cover the exponentially decaying trajectory (incomplete gamma)
and hyperbolic uniform acceleration (K_1).  Distributional pieces such as
2 pi delta(omega_k) are never folded into ``value``; they are reported in
``PhaseIntegral.distribution`` for the spectrum layer to resolve.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .condensate import Mode
from .specfun import bessel_k1, incomplete_gamma_terms, log_gamma
from .trajectory import (
    ConstantVelocity,
    ExponentialDecay,
    Sampled,
    Trajectory,
    Translated,
    UniformAccelerationRel,
)

__all__ = [
    "Window",
    "RegulatorSpec",
    "DistributionTerm",
    "PhaseIntegral",
    "PanelBudgetExceeded",
    "RegulatorConvergenceError",
    "integrate_numeric",
    "integrate_regulated",
    "integrate_closed_exponential",
    "integrate_closed_uniform_acceleration",
    "integrate_closed_constant_velocity",
    "extrapolate_regulator",
    "reference_rate",
]

NUMERIC = "numeric"
CLOSED_FORM = "closed_form"
EXTRAPOLATED = "regulator_extrapolated"

DEFAULT_LADDER = tuple(0.25 * 0.5**j for j in range(7))

# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])

_TAIL_RATIO = 1e-3
_TAIL_TRUNCATION = 1e-12
_TAIL_ABSOLUTE = 1e-14
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Window:
    t_i: float = -math.inf
    t_f: float = math.inf

    def __post_init__(self):
        if math.isnan(self.t_i) or math.isnan(self.t_f):
            raise ValueError("window endpoints must not be NaN")
        if self.t_i == math.inf or self.t_f == -math.inf:
            raise ValueError("window endpoints point the wrong way")
        if not self.t_i < self.t_f:
            raise ValueError(f"window requires t_i < t_f, got ({self.t_i}, {self.t_f})")

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.t_i) and math.isfinite(self.t_f)

    @property
    def is_full_line(self) -> bool:
        return self.t_i == -math.inf and self.t_f == math.inf


@dataclass(frozen=True)
class RegulatorSpec:
    """Adiabatic damping factor and the epsilon ladder used to remove it.

    ``kind`` is ``"exponential"`` (exp(-eps |t|)), ``"gaussian"`` (exp(-(eps t)^2))
    or ``"none"``.  With ``relative=True`` the ladder entries are multiples of
    the slowest asymptotic phase rate of the mode being integrated.
    """

    kind: str = "exponential"
    ladder: tuple = DEFAULT_LADDER
    order: int | None = None
    relative: bool = True

    def __post_init__(self):
        if self.kind not in ("none", "exponential", "gaussian"):
            raise ValueError(f"unknown regulator kind {self.kind!r}")
        ladder = tuple(float(e) for e in self.ladder)
        object.__setattr__(self, "ladder", ladder)
        if self.kind == "none":
            return
        if len(ladder) < 2:
            raise ValueError("regulator ladder needs at least two values")
        if any(not (e > 0 and math.isfinite(e)) for e in ladder):
            raise ValueError("regulator ladder values must be positive and finite")
        if any(b >= a for a, b in zip(ladder, ladder[1:])):
            raise ValueError("regulator ladder must be strictly decreasing")
        order = len(ladder) - 1 if self.order is None else int(self.order)
        if not 1 <= order <= len(ladder) - 1:
            raise ValueError(f"extrapolation order must be in [1, {len(ladder) - 1}], got {order}")
        object.__setattr__(self, "order", order)


@dataclass(frozen=True)
class DistributionTerm:
    """A coefficient times a Dirac delta that the value deliberately omits."""

    name: str
    coefficient: complex


@dataclass(frozen=True)
class PhaseIntegral:
    value: complex
    error: float
    provenance: str
    regulator: RegulatorSpec | None = None
    distribution: DistributionTerm | None = None
    mode_key: tuple | None = None
    ladder: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if not self.error >= 0:
            raise ValueError(f"error estimate must be non-negative, got {self.error!r}")
        if self.provenance not in (NUMERIC, CLOSED_FORM, EXTRAPOLATED):
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def abs2(self) -> float:
        return abs(self.value) ** 2


class PanelBudgetExceeded(RuntimeError):
    def __init__(self, worst_panel, error, n_panels):
        a, b = worst_panel
        super().__init__(
            f"panel budget exhausted after {n_panels} panels; worst panel [{a:.6g}, {b:.6g}] err {error:.3e}"
        )
        self.worst_panel = worst_panel
        self.panel_error = error


class RegulatorConvergenceError(ArithmeticError):
    """Extrapolation in epsilon is not settling; ``residuals`` holds the successive corrections."""

    def __init__(self, residuals):
        super().__init__(
            "non-monotone convergence of regulator extrapolation: residuals "
            + ", ".join(f"{r:.3e}" for r in residuals)
        )
        self.residuals = tuple(residuals)


def _mode_key(mode: Mode) -> tuple:
    return (mode.k, mode.theta)


# --------------------------------------------------------------------------
# numerical quadrature


def _time_scale(traj: Trajectory) -> float:
    if isinstance(traj, Translated):
        return _time_scale(traj.base)
    if isinstance(traj, ExponentialDecay):
        return 1.0 / traj.rate
    if isinstance(traj, UniformAccelerationRel):
        return traj.sound_speed / traj.a
    if isinstance(traj, Sampled):
        t = np.asarray(traj.times)
        return float(np.min(np.diff(t)))
    return math.inf


class _Integrand:
    """exp(psi(t)) with psi = i (omega t - k_z zeta(t)) + log(damping)."""

    def __init__(self, mode: Mode, traj: Trajectory, kind: str, eps: float):
        self.omega = mode.omega
        self.kz = mode.k_z
        self.traj = traj
        self.kind = kind
        self.eps = eps

    def psi(self, t):
        t = np.asarray(t, dtype=float)
        # omega*t and kz*zeta can be large; keep them separate until the exp
        phase = self.omega * t - self.kz * self.traj.position(t)
        return 1j * phase + self._log_damping(t)

    def _log_damping(self, t):
        if self.kind == "exponential":
            return -self.eps * np.abs(t)
        if self.kind == "gaussian":
            return -((self.eps * t) ** 2)
        return np.zeros_like(t)

    def derivatives(self, t):
        t = np.asarray(t, dtype=float)
        d1 = 1j * (self.omega - self.kz * self.traj.velocity(t))
        d2 = -1j * self.kz * self.traj.acceleration(t)
        d3 = -1j * self.kz * self.traj.jerk(t)
        if self.kind == "exponential":
            d1 = d1 - self.eps * np.sign(t)
        elif self.kind == "gaussian":
            d1 = d1 - 2.0 * self.eps**2 * t
            d2 = d2 - 2.0 * self.eps**2
        return d1, d2, d3

    def __call__(self, t):
        return np.exp(self.psi(t))


def _tail(f: _Integrand, t: float, direction: int):
    """Integration-by-parts sum for int_t^{+inf} (direction=+1) or int_{-inf}^t (direction=-1)."""
    d1, d2, d3 = (complex(x) for x in f.derivatives(t))
    e = complex(f(t))
    s1 = 1.0 / d1
    s2 = d2 / d1**3
    s3 = (3.0 * d2**2 - d1 * d3) / d1**5
    total = -direction * e * (s1 + s2 + s3)
    return total, abs(e * s3) + abs(e) * 1e-15 * abs(s1)


def _asymptotic_rate(f: _Integrand, traj: Trajectory, direction: int):
    v_minus, v_plus = traj.asymptotic_velocities()
    v = v_plus if direction > 0 else v_minus
    if v is None:
        return None
    return f.omega - f.kz * v


def _find_cut(f: _Integrand, traj: Trajectory, anchor: float, direction: int, scale: float) -> float:
    """First t beyond which the integrand is asymptotic enough for the tail series."""
    rate_inf = _asymptotic_rate(f, traj, direction)
    offsets = [scale * 0.5 * j for j in range(1, 81)]
    offsets += [scale * 40.0 * 2.0**j for j in range(1, 60)]
    for off in offsets:
        t = anchor + direction * off
        with np.errstate(over="ignore", invalid="ignore"):
            d1, d2, d3 = (complex(x) for x in f.derivatives(t))
            damp = abs(complex(f(t)))
        if not all(cmath.isfinite(x) for x in (d1, d2, d3)):
            break
        if damp < 1e-300:
            return t
        a1 = abs(d1)
        if a1 == 0:
            continue
        if abs(d2) > _TAIL_RATIO * a1**2 or abs(d3) > _TAIL_RATIO * a1**3:
            continue
        # the dropped terms are at most about as large as the last kept one
        last = abs(3.0 * d2**2 - d1 * d3)
        if last > _TAIL_TRUNCATION * a1**4 and damp * last > _TAIL_ABSOLUTE * scale * a1**5:
            continue
        # no stationary point may remain further out
        phi1 = d1.imag
        if rate_inf is not None:
            far = [rate_inf]
        else:
            with np.errstate(over="ignore", invalid="ignore"):
                far = [float(np.imag(f.derivatives(t + direction * m * scale)[0])) for m in (1.0, 10.0)]
        if any(np.sign(x) != np.sign(phi1) and x != 0 and phi1 != 0 for x in far if math.isfinite(x)):
            continue
        return t
    raise ArithmeticError("could not locate an asymptotic tail for the phase integral")


def _panel_breaks(f: _Integrand, lo: float, hi: float, scale: float, forced=()):
    n = int(np.clip(64.0 * (hi - lo) / scale if math.isfinite(scale) else 0, 2049, 400001))
    ts = np.linspace(lo, hi, n)
    with np.errstate(over="ignore"):
        rate = np.abs(f.derivatives(ts)[0])
    rate = np.nan_to_num(rate, nan=0.0, posinf=1e300)
    rate = np.maximum(rate, 1.0 / (hi - lo))
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (rate[1:] + rate[:-1]) * np.diff(ts))])
    n_panels = max(8, int(math.ceil(cum[-1] / (0.5 * math.pi))))
    breaks = np.interp(np.linspace(0.0, cum[-1], n_panels + 1), cum, ts)
    breaks[0], breaks[-1] = lo, hi
    extra = [x for x in forced if lo < x < hi]
    if extra:
        breaks = np.union1d(breaks, extra)
    return breaks


def _gk15(f: _Integrand, a: np.ndarray, b: np.ndarray):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    psi = f.psi(x)
    fx = np.exp(psi)
    kron = half * (fx @ _KRONROD)
    gauss = half * (fx @ _GAUSS)
    # roundoff in a large phase is the dominant floor far out on a tail
    scale = np.abs(half) * ((np.abs(fx) * (1.0 + np.abs(psi.imag))) @ _KRONROD)
    return kron, np.abs(kron - gauss), scale


def _quad_panels(f: _Integrand, breaks: np.ndarray, tol: float, max_panels: int):
    a = breaks[:-1].copy()
    b = breaks[1:].copy()
    if len(a) > max_panels:
        raise PanelBudgetExceeded((float(a[0]), float(b[-1])), math.inf, len(a))
    val, err, scale = _gk15(f, a, b)
    while True:
        total = val.sum()
        floor = 50.0 * _EPS * scale.sum()
        target = max(tol * abs(total), floor)
        if err.sum() <= target:
            return complex(total), float(err.sum() + floor)
        bad = err > np.maximum(target / len(err), 50.0 * _EPS * scale)
        if not bad.any():
            bad = err >= err.max()
        if len(a) + bad.sum() > max_panels:
            worst = int(np.argmax(err))
            raise PanelBudgetExceeded((float(a[worst]), float(b[worst])), float(err[worst]), len(a))
        am, bm = a[bad], b[bad]
        mid = 0.5 * (am + bm)
        na = np.concatenate([am, mid])
        nb = np.concatenate([mid, bm])
        nv, ne, ns = _gk15(f, na, nb)
        keep = ~bad
        order = np.argsort(np.concatenate([a[keep], na]), kind="stable")
        a = np.concatenate([a[keep], na])[order]
        b = np.concatenate([b[keep], nb])[order]
        val = np.concatenate([val[keep], nv])[order]
        err = np.concatenate([err[keep], ne])[order]
        scale = np.concatenate([scale[keep], ns])[order]


def _integrate_window(mode, traj, window: Window, kind: str, eps: float, tol: float, max_panels: int):
    f = _Integrand(mode, traj, kind, eps)
    scale = _time_scale(traj)
    if eps > 0:
        scale = min(scale, 1.0 / eps)
    if not math.isfinite(scale):
        scale = math.pi / max(abs(mode.omega - mode.k_z * float(traj.velocity(0.0))), 1e-300)
    lo, hi = window.t_i, window.t_f
    tails = 0j
    tail_err = 0.0
    if math.isfinite(lo) and math.isfinite(hi):
        anchor = None
    else:
        anchor = lo if math.isfinite(lo) else (hi if math.isfinite(hi) else 0.0)
    if hi == math.inf:
        hi = _find_cut(f, traj, anchor, +1, scale)
        t, e = _tail(f, hi, +1)
        tails += t
        tail_err += e
    if lo == -math.inf:
        lo = _find_cut(f, traj, anchor if anchor < hi else hi - scale, -1, scale)
        t, e = _tail(f, lo, -1)
        tails += t
        tail_err += e
    forced = (0.0,) if kind == "exponential" else ()
    breaks = _panel_breaks(f, lo, hi, scale, forced)
    value, err = _quad_panels(f, breaks, tol, max_panels)
    return value + tails, err + tail_err


def _check_span(traj: Trajectory, window: Window):
    lo, hi = traj.span()
    if window.t_i < lo or window.t_f > hi:
        raise ValueError(f"window ({window.t_i}, {window.t_f}) exceeds trajectory span [{lo}, {hi}]")


def reference_rate(mode: Mode, traj: Trajectory) -> float:
    """Slowest asymptotic phase rate |omega - k_z v(+-inf)|; sets the relative regulator scale."""
    rates = [abs(mode.omega - mode.k_z * v) for v in traj.asymptotic_velocities() if v is not None]
    rates = [r for r in rates if r > 0]
    return min(rates) if rates else mode.omega


def integrate_regulated(mode: Mode, traj: Trajectory, window: Window, kind: str, eps: float,
                        tol: float = 1e-11, max_panels: int = 2_000_000) -> PhaseIntegral:
    """The integral with a single damping factor applied (no extrapolation)."""
    if kind == "none":
        eps = 0.0
    _check_span(traj, window)
    value, err = _integrate_window(mode, traj, window, kind, eps, tol, max_panels)
    return PhaseIntegral(value, err, NUMERIC, mode_key=_mode_key(mode))


def integrate_numeric(mode: Mode, traj: Trajectory, window: Window = Window(), reg: RegulatorSpec | None = None,
                      tol: float = 1e-11, max_panels: int = 2_000_000) -> PhaseIntegral:
    """Adaptive quadrature of the phase integral.

    Finite windows are integrated directly (any regulator is ignored).  An
    infinite window requires a regulator: the integral is evaluated along
    its epsilon ladder and extrapolated to epsilon = 0.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    _check_span(traj, window)
    if window.is_finite:
        value, err = _integrate_window(mode, traj, window, "none", 0.0, tol, max_panels)
        return PhaseIntegral(value, err, NUMERIC, mode_key=_mode_key(mode))
    if reg is None or reg.kind == "none":
        raise ValueError("an infinite window needs a regulator (exponential or gaussian)")
    unit = reference_rate(mode, traj) if reg.relative else 1.0
    ladder = []
    for e in reg.ladder:
        value, err = _integrate_window(mode, traj, window, reg.kind, e * unit, tol, max_panels)
        ladder.append((e * unit, PhaseIntegral(value, err, NUMERIC, mode_key=_mode_key(mode))))
    out = extrapolate_regulator(ladder, order=reg.order)
    return PhaseIntegral(out.value, out.error, EXTRAPOLATED, regulator=reg,
                         mode_key=_mode_key(mode), ladder=out.ladder)


# --------------------------------------------------------------------------
# epsilon -> 0 extrapolation


def _neville_diagonal(eps: np.ndarray, vals: np.ndarray):
    """Extrapolants P_j at eps = 0 using the j+1 smallest epsilons, j = 0..m."""
    order = np.argsort(eps)  # smallest first
    x = eps[order]
    y = vals[order].astype(complex)
    out = []
    for j in range(len(x)):
        table = y[: j + 1].copy()
        xs = x[: j + 1]
        for level in range(1, j + 1):
            for i in range(j + 1 - level):
                table[i] = (xs[i + level] * table[i] - xs[i] * table[i + 1]) / (xs[i + level] - xs[i])
        out.append(table[0])
    return np.array(out)


def _lebesgue_at_zero(x: np.ndarray) -> np.ndarray:
    weights = np.ones(len(x))
    for j in range(len(x)):
        for m in range(len(x)):
            if m != j:
                weights[j] *= x[m] / (x[m] - x[j])
    return np.abs(weights)


def extrapolate_regulator(values, order: int | None = None) -> PhaseIntegral:
    """Polynomial (Richardson/Neville) extrapolation of regulated integrals to eps = 0.

    ``values`` is a sequence of ``(eps, PhaseIntegral | complex)``.  The error is
    the change between the last two extrapolation orders plus the propagated
    input errors.
    """
    values = list(values)
    if len(values) < 2:
        raise ValueError("need at least two ladder points")
    eps = np.array([float(e) for e, _ in values])
    if np.any(eps <= 0) or len(set(eps.tolist())) != len(eps):
        raise ValueError("ladder epsilons must be positive and distinct")
    keys = {v.mode_key for _, v in values if isinstance(v, PhaseIntegral) and v.mode_key is not None}
    if len(keys) > 1:
        raise ValueError("ladder mixes integrals of different modes")
    vals = np.array([complex(v.value) if isinstance(v, PhaseIntegral) else complex(v) for _, v in values])
    errs = np.array([v.error if isinstance(v, PhaseIntegral) else 0.0 for _, v in values])
    m = len(values) - 1 if order is None else int(order)
    if not 1 <= m <= len(values) - 1:
        raise ValueError(f"order must be in [1, {len(values) - 1}]")
    idx = np.argsort(eps)[: m + 1]
    x, y, e = eps[idx], vals[idx], errs[idx]
    diag = _neville_diagonal(x, y)
    steps = np.abs(np.diff(diag))
    propagated = float(_lebesgue_at_zero(x) @ e)
    floor = 1e3 * _EPS * float(np.max(np.abs(y))) + 10.0 * propagated
    if m >= 2 and steps[-1] > steps[-2] and steps[-1] > floor:
        raise RegulatorConvergenceError(steps.tolist())
    key = next(iter(keys)) if keys else None
    ladder = tuple((float(a), complex(b)) for a, b in sorted(zip(eps, vals), reverse=True))
    return PhaseIntegral(complex(diag[-1]), float(steps[-1] + propagated), EXTRAPOLATED,
                         mode_key=key, ladder=ladder)


# --------------------------------------------------------------------------
# closed forms


def _scaled_gamma_term(s: complex, A: float, rate: float, t: float, log_pref: complex) -> complex:
    """(iA)^{-s} gamma(s, iA exp(-rate t)) with the large factors combined in log space.

    t -> -inf gives (iA)^{-s} Gamma(s); t -> +inf gives the regulated 0.
    """
    if t == math.inf:
        return 0j
    complete = cmath.exp(log_pref + log_gamma(s))
    if t == -math.inf or -rate * t > 700.0:
        return complete
    z = 1j * A * math.exp(-rate * t)
    m, h = incomplete_gamma_terms(s, z)
    # (iA)^{-s} z^s = exp(-s rate t) = exp(i omega t) since arg z = arg(iA)
    tail = cmath.exp(-s * rate * t - z) * h
    return m * complete + tail


def integrate_closed_exponential(mode: Mode, zeta0: float, rate: float, window: Window = Window()) -> PhaseIntegral:
    """Incomplete-gamma form of I_k for zeta(t) = zeta0 exp(-rate t).

    Any infinite endpoint is taken in the regulated sense (omega/rate ->
    omega/rate + i0), so the full line reproduces the Gamma-function result.
    """
    if not rate > 0:
        raise ValueError("rate must be positive")
    if zeta0 == 0:
        raise ValueError("zeta0 must be nonzero")
    omega = mode.omega
    A = mode.k_z * zeta0
    prov = CLOSED_FORM if window.is_finite else EXTRAPOLATED
    key = _mode_key(mode)
    if A == 0:
        # pure tone: finite pieces plus pi delta(omega) per infinite end
        ends = [window.t_i, window.t_f]
        val = 0j
        for sign, t in ((-1.0, ends[0]), (1.0, ends[1])):
            if math.isfinite(t):
                val += sign * cmath.exp(1j * omega * t) / (1j * omega)
        n_inf = sum(not math.isfinite(t) for t in ends)
        dist = DistributionTerm("delta(omega_k)", complex(math.pi * n_inf)) if n_inf else None
        return PhaseIntegral(val, 0.0, prov, distribution=dist, mode_key=key)
    s = complex(0.0, -omega / rate)
    # (iA)^(-s) = |A|^{i w/G} exp(-sgn(A) pi w / 2G); kept in log form
    log_pref = -s * cmath.log(1j * A)
    if window.is_full_line:
        value = cmath.exp(log_pref + log_gamma(s)) / rate
    else:
        value = (_scaled_gamma_term(s, A, rate, window.t_i, log_pref)
                 - _scaled_gamma_term(s, A, rate, window.t_f, log_pref)) / rate
    return PhaseIntegral(complex(value), 1e-13 * abs(value), prov, mode_key=key)


def integrate_closed_uniform_acceleration(mode: Mode, a: float, sound_speed: float = 1.0) -> PhaseIntegral:
    """Full-line I_k for hyperbolic motion: regular part i (2c/a) K_1(mu) sinh(sigma).

    The pi (2c/a) cosh(sigma) delta(mu_k) piece is returned as a distribution flag.
    """
    if not a > 0:
        raise ValueError("acceleration must be positive")
    c = sound_speed
    w2 = mode.omega**2
    f2 = mode.free_frequency**2
    cos = mode.cos_theta
    ck2 = w2 - f2  # (c k)^2 from the dispersion itself
    sin2 = 1.0 - cos * cos
    big_omega = math.sqrt(ck2 * sin2 + f2)  # sqrt(omega^2 - (c k_z)^2)
    mu = (c / a) * big_omega
    ckz = math.sqrt(ck2) * cos
    sinh_sigma = ckz / big_omega
    cosh_sigma = mode.omega / big_omega
    value = 1j * (2.0 * c / a) * bessel_k1(mu) * sinh_sigma
    dist = DistributionTerm("delta(mu_k)", complex(2.0 * c / a * math.pi * cosh_sigma))
    return PhaseIntegral(complex(value), 1e-13 * abs(value), CLOSED_FORM, distribution=dist,
                         mode_key=_mode_key(mode))


def integrate_closed_constant_velocity(mode: Mode, v: float, window: Window = Window()) -> PhaseIntegral:
    """Pure tone at the Doppler-shifted rate omega_k - k_z v.

    Each infinite endpoint contributes pi delta(omega_k - k_z v), reported as a
    distribution; the resonant set is empty whenever |v| <= c.
    """
    rate = mode.omega - mode.k_z * v
    ends = (window.t_i, window.t_f)
    n_inf = sum(not math.isfinite(t) for t in ends)
    key = _mode_key(mode)
    dist = DistributionTerm("delta(omega_k - k_z v)", complex(math.pi * n_inf)) if n_inf else None
    prov = CLOSED_FORM if n_inf == 0 else EXTRAPOLATED
    if rate == 0:
        if n_inf:
            return PhaseIntegral(0j, 0.0, prov, distribution=dist, mode_key=key)
        return PhaseIntegral(complex(window.t_f - window.t_i), 0.0, prov, mode_key=key)
    value = 0j
    for sign, t in ((-1.0, ends[0]), (1.0, ends[1])):
        if math.isfinite(t):
            value += sign * cmath.exp(1j * rate * t) / (1j * rate)
    return PhaseIntegral(value, 1e-15 * abs(value), prov, distribution=dist, mode_key=key)
