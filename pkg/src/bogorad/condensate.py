"""Condensate parameters, Bogoliubov dispersion and derived scales.

Every formula here is written covariantly, so any consistent unit system
works.  :func:`to_natural` maps a parameter set onto the system with
``hbar = M = c = 1`` (hence ``g n = 1`` and ``xi = 1/2``); the CLI always
computes there and re-dimensionalizes on output.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

__all__ = [
    "CondensateParams",
    "DerivedScales",
    "Mode",
    "UnitScale",
    "derive_scales",
    "make_mode",
    "free_energy",
    "bogoliubov_frequency",
    "to_natural",
    "from_natural",
]


@dataclass(frozen=True)
class CondensateParams:
    """Microscopic inputs of the weakly interacting Bose gas.

    ``coupling`` is the impurity-boson contact strength (lambda).  ``n_particles``
    and ``box_length`` are only needed for finite-size quantities such as the
    depletion mode sum.
    """

    mass: float
    g: float
    density: float
    coupling: float
    hbar: float = 1.0
    n_particles: int | None = None
    box_length: float | None = None
    diluteness_threshold: float = 1e-2

    def __post_init__(self):
        for name in ("mass", "g", "density", "hbar"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a finite positive number, got {value!r}")
        if not math.isfinite(self.coupling):
            raise ValueError(f"coupling must be finite, got {self.coupling!r}")
        if self.n_particles is not None and self.n_particles <= 0:
            raise ValueError(f"n_particles must be positive, got {self.n_particles!r}")
        if self.box_length is not None and not self.box_length > 0:
            raise ValueError(f"box_length must be positive, got {self.box_length!r}")
        if self.n_particles is not None and self.box_length is not None:
            implied = self.n_particles / self.box_length**3
            if abs(implied - self.density) > 1e-12 * self.density:
                raise ValueError(
                    f"density {self.density!r} inconsistent with n_particles/box_length**3 = {implied!r}"
                )

    @classmethod
    def natural(cls, density: float, coupling: float, **kwargs) -> "CondensateParams":
        """Parameters in units with hbar = M = c = 1, i.e. g = 1/density."""
        return cls(mass=1.0, g=1.0 / density, density=density, coupling=coupling, hbar=1.0, **kwargs)

    @classmethod
    def from_box(cls, mass, g, n_particles, box_length, coupling, hbar=1.0, **kwargs):
        return cls(
            mass=mass,
            g=g,
            density=n_particles / box_length**3,
            coupling=coupling,
            hbar=hbar,
            n_particles=n_particles,
            box_length=box_length,
            **kwargs,
        )

    @property
    def scattering_length(self) -> float:
        # Born relation g = 4 pi hbar^2 a_s / M
        return self.g * self.mass / (4.0 * math.pi * self.hbar**2)

    @property
    def gas_parameter(self) -> float:
        """n a_s^3."""
        return self.density * self.scattering_length**3

    @property
    def is_dilute(self) -> bool:
        return self.gas_parameter < self.diluteness_threshold

    @property
    def sound_speed(self) -> float:
        return math.sqrt(self.g * self.density / self.mass)

    @property
    def healing_length(self) -> float:
        return self.hbar / (2.0 * self.mass * self.sound_speed)

    @property
    def volume(self) -> float | None:
        return None if self.box_length is None else self.box_length**3


@dataclass(frozen=True)
class UnitScale:
    """Conversion factors from natural units (hbar = M = c = 1) to the caller's units."""

    length: float
    time: float
    energy: float

    @property
    def mass(self) -> float:
        return self.energy * self.time**2 / self.length**2

    @property
    def velocity(self) -> float:
        return self.length / self.time

    @property
    def action(self) -> float:
        return self.energy * self.time


@dataclass(frozen=True)
class DerivedScales:
    sound_speed: float
    healing_length: float
    scattering_length: float
    units: UnitScale


def derive_scales(params: CondensateParams) -> DerivedScales:
    c = params.sound_speed
    units = UnitScale(
        length=params.hbar / (params.mass * c),
        time=params.hbar / (params.mass * c**2),
        energy=params.mass * c**2,
    )
    return DerivedScales(
        sound_speed=c,
        healing_length=params.healing_length,
        scattering_length=params.scattering_length,
        units=units,
    )


def to_natural(params: CondensateParams) -> tuple[CondensateParams, UnitScale]:
    """Return the same condensate in hbar = M = c = 1 units, plus the scale to undo it."""
    units = derive_scales(params).units
    volume_scale = units.length**3
    natural = replace(
        params,
        mass=1.0,
        hbar=1.0,
        g=params.g / (units.energy * volume_scale),
        density=params.density * volume_scale,
        coupling=params.coupling / (units.energy * volume_scale),
        box_length=None if params.box_length is None else params.box_length / units.length,
    )
    return natural, units


def from_natural(natural: CondensateParams, units: UnitScale) -> CondensateParams:
    volume_scale = units.length**3
    return replace(
        natural,
        mass=natural.mass * units.mass,
        hbar=natural.hbar * units.action,
        g=natural.g * units.energy * volume_scale,
        density=natural.density / volume_scale,
        coupling=natural.coupling * units.energy * volume_scale,
        box_length=None if natural.box_length is None else natural.box_length * units.length,
    )


def free_energy(params: CondensateParams, k):
    """epsilon_k = hbar^2 k^2 / 2M (energy)."""
    k = np.asarray(k, dtype=float)
    return params.hbar**2 * k**2 / (2.0 * params.mass)

def bogoliubov_frequency(params: CondensateParams, k):
    """omega_k with hbar omega_k = sqrt(eps_k (eps_k + 2 g n))."""
    eps = free_energy(params, k)
    return np.sqrt(eps * (eps + 2.0 * params.g * params.density)) / params.hbar


@dataclass(frozen=True)
class Mode:
    """A wave vector reduced to (k, theta); azimuth never matters for z-axis motion."""

    k: float
    theta: float
    epsilon: float
    omega: float
    bogoliubov_angle: float
    free_frequency: float  # epsilon_k / hbar

    @property
    def cos_theta(self) -> float:
        # exact zero in the equatorial plane, where k_z = 0 selects a distinct branch
        return 0.0 if self.theta == math.pi / 2 else math.cos(self.theta)

    @property
    def k_z(self) -> float:
        return self.k * self.cos_theta

    @property
    def k_perp(self) -> float:
        return self.k * math.sin(self.theta)

    def reflected(self) -> "Mode":
        """The mode -k, which for z-only trajectories means theta -> pi - theta."""
        return replace(self, theta=math.pi - self.theta)


def make_mode(params: CondensateParams, k: float, theta: float) -> Mode:
    if not (math.isfinite(k) and k > 0):
        raise ValueError(f"mode wavenumber must be positive (zero mode is excluded), got k={k!r}")
    if not (0.0 <= theta <= math.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    eps = float(free_energy(params, k))
    gn = params.g * params.density
    hw = math.sqrt(eps * (eps + 2.0 * gn))
    return Mode(
        k=float(k),
        theta=float(theta),
        epsilon=eps,
        omega=hw / params.hbar,
        bogoliubov_angle=math.atanh(gn / (hw + eps + gn)),
        free_frequency=eps / params.hbar,
    )
