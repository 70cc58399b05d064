"""Experiment configuration: geometry, mirror and environment specs.

The reference design point is a 10^-6 cm interfering wavelength bouncing
off a vanadium disk of diameter 2.5 wavelengths, probed by a quarter-
wavelength beam, in rubidium-85 background gas.  All defaults derive from
that point; every field can be overridden individually.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CGS, RUBIDIUM_85_AMU
from .errors import InvalidConfig

#: Reference interfering wavelength, cm.
REFERENCE_LAMBDA1 = 1e-6


@dataclass(frozen=True)
class ExperimentGeometry:
    lambda1: float                 # interfering wavelength, cm
    slit_separation_S: float       # cm
    slit_mirror_distance_L: float  # slit/screen plane to mirror rest position, cm
    mirror_diameter_W: float       # cm
    lambda2: float                 # position-probe wavelength, cm
    probe_angle_theta: float       # rad, measured so the aperture bound scales as 1/cos
    probe_aperture_Wa: float       # cm


@dataclass(frozen=True)
class MirrorSpec:
    mass_M: float            # g
    delta_q_i: float         # initial (ground-state) position spread, cm
    density_rho: float       # g/cm^3
    sound_speed_vs: float    # cm/s
    atomic_weight_aw: float  # amu
    lattice_spacing_d: float  # cm
    emissivity_e: float = 1.0  # dimensionless, in (0, 1]


@dataclass(frozen=True)
class EnvironmentSpec:
    alpha: float               # allowed thermal-velocity / spreading-velocity ratio
    gas_particle_mass: float   # g


@dataclass(frozen=True)
class Config:
    geometry: ExperimentGeometry
    mirror: MirrorSpec
    environment: EnvironmentSpec


def default_geometry(lambda1: float = REFERENCE_LAMBDA1,
                     theta: float = 0.0) -> ExperimentGeometry:
    """Geometry with every length derived from the interfering wavelength.

    Slit plane and screen sit 2.5 wavelengths above the mirror, the mirror
    diameter equals that distance, the slits are 2.29 wavelengths apart
    (placing the first interference nodes at the slits), the probe runs at
    a quarter wavelength and its aperture is four probe wavelengths times
    cos(theta).
    """
    lambda2 = lambda1 / 4.0
    return ExperimentGeometry(
        lambda1=lambda1,
        slit_separation_S=2.29 * lambda1,
        slit_mirror_distance_L=2.5 * lambda1,
        mirror_diameter_W=2.5 * lambda1,
        lambda2=lambda2,
        probe_angle_theta=theta,
        probe_aperture_Wa=4.0 * lambda2 * math.cos(theta),
    )


def default_mirror() -> MirrorSpec:
    """Vanadium disk at the reference design point."""
    d = 2.4e-8
    return MirrorSpec(
        mass_M=1.1e-17,
        delta_q_i=d / 2.0,
        density_rho=6.1,
        sound_speed_vs=3e5,
        atomic_weight_aw=50.0,
        lattice_spacing_d=d,
        emissivity_e=1.0,
    )


def default_environment() -> EnvironmentSpec:
    """Rubidium-85 background gas at the recommended operating ratio alpha = 5."""
    return EnvironmentSpec(alpha=5.0, gas_particle_mass=RUBIDIUM_85_AMU * CGS.amu)


def default_config() -> tuple[ExperimentGeometry, MirrorSpec, EnvironmentSpec]:
    return default_geometry(), default_mirror(), default_environment()


def _positive(violations, owner, name, value):
    if not (value > 0.0) or math.isinf(value) or math.isnan(value):
        violations.append((f"{owner}.{name}", "must be a positive finite number"))


def validate_config(geometry: ExperimentGeometry,
                    mirror: MirrorSpec,
                    env: EnvironmentSpec) -> Config:
    """Check every invariant; raise InvalidConfig listing all violations.

    Returns the inputs bundled unchanged when everything holds.  Pure: the
    same inputs always produce the same result.
    """
    v: list[tuple[str, str]] = []
    for name in ("lambda1", "slit_separation_S", "slit_mirror_distance_L",
                 "mirror_diameter_W", "lambda2", "probe_aperture_Wa"):
        _positive(v, "geometry", name, getattr(geometry, name))
    theta = geometry.probe_angle_theta
    if math.isnan(theta) or not (0.0 <= theta < math.pi / 2.0):
        v.append(("geometry.probe_angle_theta", "must satisfy 0 <= theta < pi/2"))
    for name in ("mass_M", "delta_q_i", "density_rho", "sound_speed_vs",
                 "atomic_weight_aw", "lattice_spacing_d", "emissivity_e"):
        _positive(v, "mirror", name, getattr(mirror, name))
    if mirror.emissivity_e > 1.0:
        v.append(("mirror.emissivity_e", "must be <= 1"))
    _positive(v, "environment", "alpha", env.alpha)
    _positive(v, "environment", "gas_particle_mass", env.gas_particle_mass)
    if v:
        raise InvalidConfig(v)
    return Config(geometry=geometry, mirror=mirror, environment=env)
