"""Mirror center-of-mass position densities and free-spreading kinematics.

Densities are immutable and normalized to unit mass.  The point-mass
variants (Delta, Bifurcated) carry no pointwise value and are handled
analytically by the field integrators; the extended variants (Gaussian,
TruncatedGaussian, Tabulated) evaluate pointwise and are integrated
numerically.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .constants import CGS
from .errors import DeltaNotPointwise, EmptyInterval, NonPositiveInput


# ---------------------------------------------------------------------------
# position densities

@dataclass(frozen=True)
class Delta:
    """Mirror pinned at a single position z0 (cm)."""
    z0: float = 0.0


@dataclass(frozen=True)
class Bifurcated:
    """Mirror split between two positions; weight1 is the probability of z1."""
    z1: float
    z2: float
    weight1: float = 0.5

    def __post_init__(self):
        if not (0.0 <= self.weight1 <= 1.0):
            raise NonPositiveInput("weight1 must lie in [0, 1]")


@dataclass(frozen=True)
class Gaussian:
    """Zero-centered Gaussian of standard deviation sigma (cm)."""
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0.0:
            raise NonPositiveInput("sigma must be positive")


@dataclass(frozen=True)
class TruncatedGaussian:
    """Gaussian restricted to [z_lo, z_hi] and renormalized to unit mass.

    Built via :func:`truncate`; ``renorm`` is the reciprocal of the parent
    Gaussian's mass on the interval.
    """
    sigma: float
    z_lo: float
    z_hi: float
    renorm: float


@dataclass(frozen=True)
class Tabulated:
    """Piecewise-linear density on an ascending grid, renormalized on build.

    ``renorm_applied`` records the factor by which the raw table was scaled
    to reach unit mass, so lossy user data is ingested rather than rejected.
    """
    z_grid: np.ndarray
    p_values: np.ndarray
    renorm_applied: float = field(default=1.0)

    def __post_init__(self):
        z = np.asarray(self.z_grid, dtype=float)
        p = np.asarray(self.p_values, dtype=float)
        if z.ndim != 1 or z.size < 2:
            raise NonPositiveInput("tabulated grid needs at least 2 points")
        if not np.all(np.diff(z) > 0.0):
            raise NonPositiveInput("tabulated grid must be strictly ascending")
        if np.any(p < 0.0) or z.size != p.size:
            raise NonPositiveInput("tabulated values must be nonnegative, same length as grid")
        mass = float(np.trapezoid(p, z))
        if not mass > 0.0:
            raise NonPositiveInput("tabulated density has zero mass")
        object.__setattr__(self, "z_grid", z)
        object.__setattr__(self, "p_values", p / mass)
        object.__setattr__(self, "renorm_applied", 1.0 / mass)


PointLike = (Delta, Bifurcated)
PositionDensity = Delta | Bifurcated | Gaussian | TruncatedGaussian | Tabulated


def density_value(density, z):
    """Probability density (1/cm) at z; z may be a scalar or an array.

    Point-mass variants raise DeltaNotPointwise: their mass sits on isolated
    positions and downstream integrals treat them analytically.
    """
    if isinstance(density, PointLike):
        raise DeltaNotPointwise(f"{type(density).__name__} has no pointwise value")
    z = np.asarray(z, dtype=float)
    if isinstance(density, Gaussian):
        s = density.sigma
        out = np.exp(-z * z / (2.0 * s * s)) / math.sqrt(2.0 * math.pi * s * s)
    elif isinstance(density, TruncatedGaussian):
        s = density.sigma
        g = np.exp(-z * z / (2.0 * s * s)) / math.sqrt(2.0 * math.pi * s * s)
        out = np.where((z >= density.z_lo) & (z <= density.z_hi), g * density.renorm, 0.0)
    elif isinstance(density, Tabulated):
        out = np.interp(z, density.z_grid, density.p_values, left=0.0, right=0.0)
    else:
        raise TypeError(f"not a position density: {density!r}")
    return out if out.ndim else float(out)


def support(density, half_width_sigmas: float = 8.0) -> tuple[float, float]:
    """Integration support: exact for truncated/tabulated, +-n sigma for Gaussian."""
    if isinstance(density, Gaussian):
        w = half_width_sigmas * density.sigma
        return -w, w
    if isinstance(density, TruncatedGaussian):
        return density.z_lo, density.z_hi
    if isinstance(density, Tabulated):
        return float(density.z_grid[0]), float(density.z_grid[-1])
    raise DeltaNotPointwise(f"{type(density).__name__} has no extended support")


def truncate(density, z_lo: float, z_hi: float) -> TruncatedGaussian:
    """Restrict a Gaussian to [z_lo, z_hi], renormalizing to unit mass.

    Models a position measurement that confines the mirror to the interval.
    Accepts an existing TruncatedGaussian as well, in which case the new
    interval is intersected with the old one.
    """
    if not z_lo < z_hi:
        raise EmptyInterval(f"empty truncation interval [{z_lo}, {z_hi}]")
    if isinstance(density, TruncatedGaussian):
        z_lo = max(z_lo, density.z_lo)
        z_hi = min(z_hi, density.z_hi)
        if not z_lo < z_hi:
            raise EmptyInterval("truncation interval does not overlap existing support")
        sigma = density.sigma
    elif isinstance(density, Gaussian):
        sigma = density.sigma
    else:
        raise TypeError("only Gaussian densities can be truncated")
    root2 = math.sqrt(2.0)
    mass = 0.5 * (math.erf(z_hi / (sigma * root2)) - math.erf(z_lo / (sigma * root2)))
    if not mass > 0.0:
        raise EmptyInterval("truncation interval carries no probability mass")
    return TruncatedGaussian(sigma=sigma, z_lo=z_lo, z_hi=z_hi, renorm=1.0 / mass)


def tabulated_from_csv(path) -> Tabulated:
    """Load a two-column CSV (z_cm, p_per_cm) with a mandatory header row."""
    z, p = [], []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or len(header) < 2:
            raise NonPositiveInput(f"{path}: expected a two-column CSV with header")
        try:
            float(header[0])
        except ValueError:
            pass
        else:
            raise NonPositiveInput(f"{path}: header row is required")
        for row in reader:
            if not row or not "".join(row).strip():
                continue
            z.append(float(row[0]))
            p.append(float(row[1]))
    return Tabulated(np.asarray(z), np.asarray(p))


# ---------------------------------------------------------------------------
# spreading kinematics

def _require_positive(**kwargs):
    for name, value in kwargs.items():
        if not value > 0.0:
            raise NonPositiveInput(f"{name} must be positive, got {value!r}")


def spb_velocity(lam: float, mass_M: float) -> float:
    """Velocity uncertainty h/(lambda M) from a single-photon bifurcation (cm/s)."""
    _require_positive(lam=lam, mass_M=mass_M)
    return CGS.planck_h / (lam * mass_M)


def spreading_velocity(delta_q_i: float, mass_M: float) -> float:
    """Characteristic spreading velocity h/(4 pi dq M) of a released packet (cm/s).

    This is the minimum-uncertainty value hbar/(2 M dq) for a Gaussian of
    initial width dq.
    """
    _require_positive(delta_q_i=delta_q_i, mass_M=mass_M)
    return CGS.planck_h / (4.0 * math.pi * delta_q_i * mass_M)


def spread_time(lambda1: float, delta_v_i: float) -> float:
    """Time lambda1/dv for the packet width to reach one wavelength (s).

    Linear spreading model: width grows as dv * t once free.
    """
    _require_positive(lambda1=lambda1, delta_v_i=delta_v_i)
    return lambda1 / delta_v_i


def sigma_at_time(delta_q_i: float, mass_M: float, t: float) -> float:
    """Exact free-Gaussian width dq sqrt(1 + (hbar t / 2 M dq^2)^2) (cm).

    At t=0 this is dq; the asymptotic slope equals spreading_velocity, so the
    linear model used elsewhere is this law's long-time limit.
    """
    _require_positive(delta_q_i=delta_q_i, mass_M=mass_M)
    if t < 0.0:
        raise NonPositiveInput(f"t must be >= 0, got {t!r}")
    x = CGS.hbar * t / (2.0 * mass_M * delta_q_i * delta_q_i)
    return delta_q_i * math.sqrt(1.0 + x * x)


def trap_spring_constant(delta_q_i: float, mass_M: float) -> float:
    """Spring constant matching the ground state to (dq, dv): k = M (dv/dq)^2.

    Equivalently the k for which the confinement energy k dq^2 / 2 equals the
    kinetic spread M dv^2 / 2 (erg/cm^2).
    """
    _require_positive(delta_q_i=delta_q_i, mass_M=mass_M)
    dv = spreading_velocity(delta_q_i, mass_M)
    return mass_M * (dv / delta_q_i) ** 2
