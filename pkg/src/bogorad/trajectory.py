"""Impurity trajectories along the z axis.

Each variant exposes vectorized ``position``, ``velocity`` and the next two
time derivatives; the phase-integral code uses the higher derivatives for
its endpoint asymptotics.  ``asymptotic_velocities`` reports the limiting
velocity at t -> -inf / +inf (``None`` when it is unbounded), which sets the
scale of the regulator ladder.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np
from scipy.interpolate import CubicSpline, make_interp_spline

__all__ = [
    "ConstantVelocity",
    "ExponentialDecay",
    "UniformAccelerationRel",
    "Sampled",
    "Translated",
    "Trajectory",
    "TrajectoryDiagnostics",
    "position",
    "speed",
    "classical_potential",
    "translate",
    "diagnostics",
    "load_sampled_csv",
]


@dataclass(frozen=True)
class ConstantVelocity:
    v: float

    def position(self, t):
        return self.v * np.asarray(t, dtype=float)

    def velocity(self, t):
        return np.full_like(np.asarray(t, dtype=float), self.v)

    def acceleration(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))

    def jerk(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))

    def asymptotic_velocities(self):
        return self.v, self.v

    def span(self):
        return -math.inf, math.inf


@dataclass(frozen=True)
class ExponentialDecay:
    """zeta(t) = zeta0 exp(-rate t); approaches the origin from +inf (zeta0 > 0)."""

    zeta0: float
    rate: float

    def __post_init__(self):
        if not self.rate > 0:
            raise ValueError(f"rate (Gamma_0) must be positive, got {self.rate!r}")
        if self.zeta0 == 0:
            raise ValueError("zeta0 must be nonzero")

    def _e(self, t):
        return self.zeta0 * np.exp(-self.rate * np.asarray(t, dtype=float))

    def position(self, t):
        return self._e(t)

    def velocity(self, t):
        return -self.rate * self._e(t)

    def acceleration(self, t):
        return self.rate**2 * self._e(t)

    def jerk(self, t):
        return -self.rate**3 * self._e(t)

    def asymptotic_velocities(self):
        return None, 0.0

    def span(self):
        return -math.inf, math.inf


@dataclass(frozen=True)
class UniformAccelerationRel:
    """Hyperbolic motion zeta(t) = (c^2/a) sqrt(1 + (a t / c)^2), c the sound speed."""

    a: float
    sound_speed: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"acceleration must be positive, got {self.a!r}")
        if not self.sound_speed > 0:
            raise ValueError(f"sound_speed must be positive, got {self.sound_speed!r}")

    @property
    def acceleration_length(self) -> float:
        return self.sound_speed**2 / self.a

    def _u(self, t):
        return self.a * np.asarray(t, dtype=float) / self.sound_speed

    def position(self, t):
        return self.acceleration_length * np.sqrt(1.0 + self._u(t) ** 2)

    def velocity(self, t):
        u = self._u(t)
        return self.sound_speed * u / np.sqrt(1.0 + u**2)

    def acceleration(self, t):
        u = self._u(t)
        return self.a / (1.0 + u**2) ** 1.5

    def jerk(self, t):
        u = self._u(t)
        return -3.0 * self.a**2 / self.sound_speed * u / (1.0 + u**2) ** 2.5

    def asymptotic_velocities(self):
        return -self.sound_speed, self.sound_speed

    def span(self):
        return -math.inf, math.inf


@dataclass(frozen=True)
class Sampled:
    """Tabulated z(t), interpolated (cubic by default) and restricted to its span."""

    times: tuple
    positions: tuple
    order: int = 3
    _spline: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        z = np.asarray(self.positions, dtype=float)
        if t.ndim != 1 or t.shape != z.shape:
            raise ValueError("times and positions must be 1-D sequences of equal length")
        if self.order not in (1, 3):
            raise ValueError(f"interpolation order must be 1 or 3, got {self.order!r}")
        if t.size < self.order + 1:
            raise ValueError(f"need at least {self.order + 1} samples for order {self.order}")
        if np.any(np.diff(t) <= 0):
            raise ValueError("sample times must be strictly increasing")
        if not (np.all(np.isfinite(t)) and np.all(np.isfinite(z))):
            raise ValueError("samples must be finite")
        if self.order == 3:
            spline = CubicSpline(t, z, bc_type="not-a-knot")
        else:
            spline = make_interp_spline(t, z, k=1)
        object.__setattr__(self, "times", tuple(t.tolist()))
        object.__setattr__(self, "positions", tuple(z.tolist()))
        object.__setattr__(self, "_spline", spline)

    def _check(self, t):
        t = np.asarray(t, dtype=float)
        lo, hi = self.times[0], self.times[-1]
        if np.any((t < lo) | (t > hi)) or np.any(~np.isfinite(t)):
            raise ValueError(f"time outside sampled span [{lo}, {hi}]")
        return t

    def _eval(self, t, nu):
        t = self._check(t)
        if self.order == 1 and nu > 1:
            return np.zeros_like(t)
        return self._spline(t, nu)

    def position(self, t):
        return self._eval(t, 0)

    def velocity(self, t):
        return self._eval(t, 1)

    def acceleration(self, t):
        return self._eval(t, 2)

    def jerk(self, t):
        return self._eval(t, 3)

    def asymptotic_velocities(self):
        return None, None

    def span(self):
        return self.times[0], self.times[-1]


@dataclass(frozen=True)
class Translated:
    """A trajectory rigidly shifted along z by ``offset``."""

    base: "Trajectory"
    offset: float

    def position(self, t):
        return self.base.position(t) + self.offset

    def velocity(self, t):
        return self.base.velocity(t)

    def acceleration(self, t):
        return self.base.acceleration(t)

    def jerk(self, t):
        return self.base.jerk(t)

    def asymptotic_velocities(self):
        return self.base.asymptotic_velocities()

    def span(self):
        return self.base.span()


Trajectory = Union[ConstantVelocity, ExponentialDecay, UniformAccelerationRel, Sampled, Translated]


def position(traj: Trajectory, t):
    return traj.position(t)


def speed(traj: Trajectory, t):
    """dzeta/dt (signed z component of the velocity)."""
    return traj.velocity(t)


def translate(traj: Trajectory, offset: float) -> Translated:
    return Translated(traj, float(offset))


def classical_potential(traj: Trajectory, zeta, impurity_mass: float):
    """Potential that generates the trajectory for a nonrelativistic impurity."""
    zeta = np.asarray(zeta, dtype=float)
    if isinstance(traj, ExponentialDecay):
        # inverted harmonic well
        return -0.5 * impurity_mass * traj.rate**2 * zeta**2
    if isinstance(traj, UniformAccelerationRel):
        if np.any(zeta == 0):
            raise ValueError("uniform-acceleration potential is singular at zeta = 0")
        return 0.5 * impurity_mass * (traj.sound_speed**3 / (traj.a * zeta)) ** 2
    raise TypeError(f"no generating potential for {type(traj).__name__}")


@dataclass(frozen=True)
class TrajectoryDiagnostics:
    max_speed: float
    acceleration_parameter: float | None = None
    acceleration_length: float | None = None
    unruh_temperature: float | None = None
    boltzmann_temperature: float | None = None


def diagnostics(traj: Trajectory, t_min: float, t_max: float, hbar: float = 1.0, samples: int = 2001):
    """Kinematic summary over [t_min, t_max]; temperatures are k_B T in energy units."""
    t = np.linspace(t_min, t_max, samples)
    vmax = float(np.max(np.abs(traj.velocity(t))))
    if isinstance(traj, ExponentialDecay):
        return TrajectoryDiagnostics(
            max_speed=vmax,
            acceleration_parameter=traj.rate,
            unruh_temperature=hbar * traj.rate / (2.0 * math.pi),
        )
    if isinstance(traj, UniformAccelerationRel):
        rate = traj.a / traj.sound_speed
        return TrajectoryDiagnostics(
            max_speed=vmax,
            acceleration_parameter=rate,
            acceleration_length=traj.acceleration_length,
            unruh_temperature=hbar * rate / (2.0 * math.pi),
            boltzmann_temperature=hbar * traj.a / (2.0 * traj.sound_speed),
        )
    return TrajectoryDiagnostics(max_speed=vmax)


def load_sampled_csv(path, order: int = 3) -> Sampled:
    """Two columns (t, zeta_z); a non-numeric first row is treated as a header."""
    rows = []
    with open(Path(path), newline="") as fh:
        for i, row in enumerate(csv.reader(fh)):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise ValueError(f"{path}: line {i + 1}: expected 2 columns, got {len(row)}")
            try:
                rows.append((float(row[0]), float(row[1])))
            except ValueError:
                if i == 0 and not rows:
                    continue
                raise ValueError(f"{path}: line {i + 1}: non-numeric entry {row!r}") from None
    if not rows:
        raise ValueError(f"{path}: no samples")
    t, z = zip(*rows)
    return Sampled(tuple(t), tuple(z), order=order)
