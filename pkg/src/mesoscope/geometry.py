"""Round-trip path lengths, path-length differences and probe resolution.

Sign convention: z is the mirror displacement along the optical axis, with
positive z moving the mirror *away* from the slit plane.  The vertical leg
of a bounce is therefore (z + L).  First-order treatment: no amplitude
attenuation with distance; an optional 1/r flag lives in the interference
module and stays off for all reference results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import ExperimentGeometry
from .errors import GeometryViolation, NonPositiveInput, NoRootInBracket


@dataclass(frozen=True)
class PathPair:
    path_from_A: float  # cm
    path_from_B: float  # cm
    pl_delta: float     # |difference|, cm


def round_trip_path(z_m: float, lateral: float, geom: ExperimentGeometry) -> float:
    """Specular bounce length 2 sqrt((z+L)^2 + lateral^2/4) (cm).

    ``lateral`` is the separation between the launch slit and the screen
    point; the reflection touches the mirror halfway between them.
    """
    L = geom.slit_mirror_distance_L
    if not z_m > -L:
        raise GeometryViolation(f"mirror at z={z_m} sits at or above the slit plane (-L={-L})")
    u = z_m + L
    return 2.0 * math.sqrt(u * u + lateral * lateral / 4.0)


def pl_delta(z_m: float, D: float, geom: ExperimentGeometry) -> PathPair:
    """Path pair for a screen point D from slit A (S - D from slit B)."""
    S = geom.slit_separation_S
    if not (0.0 <= D <= S):
        raise GeometryViolation(f"screen point D={D} outside [0, S={S}]")
    a = round_trip_path(z_m, D, geom)
    b = round_trip_path(z_m, S - D, geom)
    return PathPair(path_from_A=a, path_from_B=b, pl_delta=abs(a - b))


def solve_slit_separation(target_pl_delta: float, z_m: float,
                          geom: ExperimentGeometry) -> float:
    """Slit separation S putting a path difference of ``target`` at D = S.

    At the screen edge the near-slit bounce is purely vertical, so the
    difference 2(sqrt(u^2 + S^2/4) - u) grows monotonically with S;
    bisection on [0, 10 lambda1] converges unconditionally.  The residual
    is driven below 1e-10 lambda1.
    """
    lam1 = geom.lambda1
    L = geom.slit_mirror_distance_L
    if not z_m > -L:
        raise GeometryViolation(f"mirror at z={z_m} sits at or above the slit plane")
    if target_pl_delta < 0.0:
        raise NoRootInBracket("target path difference must be nonnegative")
    u = z_m + L

    def f(S: float) -> float:
        return 2.0 * (math.sqrt(u * u + S * S / 4.0) - u) - target_pl_delta

    lo, hi = 0.0, 10.0 * lam1
    tol = 1e-10 * lam1
    if abs(f(lo)) <= tol:
        return lo
    if f(hi) < 0.0:
        raise NoRootInBracket(f"target {target_pl_delta} not reachable for S <= {hi}")
    while True:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) <= tol or (hi - lo) <= 1e-16 * lam1:
            return mid
        if fm < 0.0:
            lo = mid
        else:
            hi = mid


def probe_resolution(lambda2: float, theta: float, Wa: float) -> float:
    """Half-width bound |z_m| <= Wa/(4 cos theta) implied by a probe detection (cm)."""
    if not (lambda2 > 0.0 and Wa > 0.0):
        raise NonPositiveInput("lambda2 and Wa must be positive")
    if not (0.0 <= theta < math.pi / 2.0):
        raise NonPositiveInput("theta must satisfy 0 <= theta < pi/2")
    return Wa / (4.0 * math.cos(theta))


def recoil_displacement(lambda2: float, mass_M: float, dt: float) -> float:
    """Worst-case mirror drift (h/(lambda2 M)) dt between probe impact and arrival (cm)."""
    if not (lambda2 > 0.0 and mass_M > 0.0):
        raise NonPositiveInput("lambda2 and mass_M must be positive")
    if dt < 0.0:
        raise NonPositiveInput("dt must be >= 0")
    from .constants import CGS
    return (CGS.planck_h / (lambda2 * mass_M)) * dt
