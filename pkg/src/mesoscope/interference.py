"""Reflected-wave fields, intensity patterns and node-sharpness metrics.

The field from a slit at a screen point is the density-weighted average of
the round-trip phase cosine,

    E = K * integral P(z) cos[(2 pi / lambda1) * path(z, lateral)] dz,

with lateral = D for slit A and S - D for slit B, and path the specular
bounce length.  The closed form of the path is even around z = -L, and the
integral runs over the density's whole support exactly as written, so
extended densities reaching below -L contribute through the mirrored
branch rather than being clipped.

Intensity is I = (E_A + E_B)^2 / 2 in arbitrary units: K defaults to 1 and
every reported metric is a ratio, never an absolute intensity.

Node metrics quantify how dark and how strong the fringes are near the
pattern edges, where the first interference nodes sit for the reference
slit separation.  ``node_depth_ratio`` is the darkest-to-brightest ratio
within the outer-eighth windows (guaranteed in [0, 1]); pattern-to-pattern
sharpness comparisons use the edge fringe amplitude on the shared
intensity scale, because extended densities can collapse the overall field
strength by orders of magnitude while retaining incidental zero crossings.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .config import ExperimentGeometry
from .errors import DegeneratePattern, NonPositiveInput
from .quadrature import QuadratureSettings, integrate_doubling, starting_intervals
from .wavepacket import (Bifurcated, Delta, PointLike, density_value, support)


def _bounce_length(z, lateral: float, L: float):
    # Closed form of the specular path; intentionally unguarded (even in z+L)
    # so densities may be integrated over their full support.
    u = z + L
    return 2.0 * np.sqrt(u * u + lateral * lateral / 4.0)


def _point_field(density, lateral: float, geom: ExperimentGeometry,
                 attenuation: bool) -> float:
    k_wave = 2.0 * math.pi / geom.lambda1
    L = geom.slit_mirror_distance_L
    if isinstance(density, Delta):
        points = ((density.z0, 1.0),)
    else:
        points = ((density.z1, density.weight1), (density.z2, 1.0 - density.weight1))
    total = 0.0
    for z, w in points:
        path = _bounce_length(z, lateral, L)
        amp = (2.0 * L / path) if attenuation else 1.0
        total += w * amp * math.cos(k_wave * path)
    return total


def _unit_field(density, lateral: float, geom: ExperimentGeometry,
                quad: QuadratureSettings, attenuation: bool) -> float:
    """Field for K = 1; point-like densities evaluate in closed form."""
    if isinstance(density, PointLike):
        return _point_field(density, lateral, geom, attenuation)
    lo, hi = support(density, quad.support_half_width_sigmas)
    k_wave = 2.0 * math.pi / geom.lambda1
    L = geom.slit_mirror_distance_L

    def integrand(z):
        path = _bounce_length(z, lateral, L)
        y = density_value(density, z) * np.cos(k_wave * path)
        if attenuation:
            y = y * (2.0 * L / path)
        return y

    n0 = starting_intervals(hi - lo, geom.lambda1, quad)
    value, _ = integrate_doubling(integrand, lo, hi, quad, n0, scale=1.0)
    return value


def field_from_slit(density, D: float, slit: str, geom: ExperimentGeometry,
                    quad: QuadratureSettings | None = None, K: float = 1.0,
                    attenuation: bool = False) -> float:
    """Field at a screen point D from slit A, for the given slit ('A' or 'B')."""
    quad = (quad or QuadratureSettings()).validated()
    S = geom.slit_separation_S
    if not (0.0 <= D <= S):
        raise NonPositiveInput(f"screen point D={D} outside [0, S={S}]")
    if slit not in ("A", "B"):
        raise NonPositiveInput(f"slit must be 'A' or 'B', got {slit!r}")
    lateral = D if slit == "A" else S - D
    return K * _unit_field(density, lateral, geom, quad, attenuation)


@dataclass(frozen=True)
class Pattern:
    D_grid: np.ndarray   # screen positions, cm, ascending over [0, S]
    E_A: np.ndarray      # field from slit A (arbitrary units)
    E_B: np.ndarray      # field from slit B
    I: np.ndarray        # intensity (E_A + E_B)^2 / 2
    K_scale: float = 1.0

    def __post_init__(self):
        for name in ("D_grid", "E_A", "E_B", "I"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        n = self.D_grid.size
        if n < 3 or any(getattr(self, f).size != n for f in ("E_A", "E_B", "I")):
            raise NonPositiveInput("pattern needs >= 3 grid points with matching lengths")


def pattern(density, geom: ExperimentGeometry,
            quad: QuadratureSettings | None = None, n_points: int = 1001,
            K: float = 1.0, attenuation: bool = False) -> Pattern:
    """Intensity pattern on a uniform n-point screen grid over [0, S].

    Each grid point's two fields are independent quadratures; no state is
    shared between points, so results do not depend on evaluation order.
    """
    if n_points < 3:
        raise NonPositiveInput("n_points must be >= 3")
    quad = (quad or QuadratureSettings()).validated()
    S = geom.slit_separation_S
    D = np.linspace(0.0, S, n_points)
    E_A = np.empty(n_points)
    E_B = np.empty(n_points)
    for j, Dj in enumerate(D):
        E_A[j] = _unit_field(density, Dj, geom, quad, attenuation)
        E_B[j] = _unit_field(density, S - Dj, geom, quad, attenuation)
    E_A *= K
    E_B *= K
    return Pattern(D_grid=D, E_A=E_A, E_B=E_B, I=0.5 * (E_A + E_B) ** 2, K_scale=K)


@dataclass(frozen=True)
class NodeMetrics:
    node_positions_D: np.ndarray  # local intensity minima, cm
    central_peak_I: float         # max I over the middle third
    edge_min_I: float             # min I over the outer-eighth windows
    edge_peak_I: float            # max I over the outer-eighth windows
    node_depth_ratio: float       # edge_min_I / edge_peak_I, in [0, 1]

    @property
    def edge_fringe_amplitude(self) -> float:
        """Intensity swing of the edge fringes (same units as I)."""
        return self.edge_peak_I - self.edge_min_I


# Pre-registered metric windows (fractions of the slit separation).
EDGE_WINDOW_FRACTION = 1.0 / 8.0
CENTER_WINDOW = (1.0 / 3.0, 2.0 / 3.0)


def node_metrics(pat: Pattern) -> NodeMetrics:
    """Locate intensity minima and measure edge-fringe darkness and strength.

    Local minima use a three-point comparison extended to the endpoints,
    since the first nodes sit exactly at the pattern edges for the
    reference slit separation.
    """
    I = pat.I
    D = pat.D_grid
    span = I.max() - I.min()
    if not span > 0.0 or not np.isfinite(span):
        raise DegeneratePattern("intensity is constant; no nodes to locate")
    interior = (I[1:-1] < I[:-2]) & (I[1:-1] < I[2:])
    idx = list(np.nonzero(interior)[0] + 1)
    if I[0] < I[1]:
        idx.insert(0, 0)
    if I[-1] < I[-2]:
        idx.append(I.size - 1)
    S = D[-1]
    edge = (D <= EDGE_WINDOW_FRACTION * S) | (D >= (1.0 - EDGE_WINDOW_FRACTION) * S)
    center = (D >= CENTER_WINDOW[0] * S) & (D <= CENTER_WINDOW[1] * S)
    edge_min = float(I[edge].min())
    edge_peak = float(I[edge].max())
    return NodeMetrics(
        node_positions_D=D[idx],
        central_peak_I=float(I[center].max()),
        edge_min_I=edge_min,
        edge_peak_I=edge_peak,
        node_depth_ratio=edge_min / edge_peak if edge_peak > 0.0 else 0.0,
    )


@dataclass(frozen=True)
class ComparisonReport:
    metrics1: NodeMetrics
    metrics2: NodeMetrics
    edge_amplitude1: float
    edge_amplitude2: float
    sharper: str  # "first" | "second" | "equal"


def compare_densities(density1, density2, geom: ExperimentGeometry,
                      quad: QuadratureSettings | None = None,
                      n_points: int = 1001) -> ComparisonReport:
    """Compare edge-fringe sharpness of two densities on one grid and scale.

    Both patterns share the geometry and K, so their intensities are
    directly comparable; the sharper pattern is the one with the larger
    edge fringe amplitude.  Ties within 1e-9 relative report "equal".
    """
    pat1 = pattern(density1, geom, quad, n_points)
    pat2 = pattern(density2, geom, quad, n_points)
    m1 = node_metrics(pat1)
    m2 = node_metrics(pat2)
    a1 = m1.edge_fringe_amplitude
    a2 = m2.edge_fringe_amplitude
    scale = max(a1, a2)
    if scale <= 0.0 or abs(a1 - a2) <= 1e-9 * scale:
        sharper = "equal"
    else:
        sharper = "first" if a1 > a2 else "second"
    return ComparisonReport(metrics1=m1, metrics2=m2,
                            edge_amplitude1=a1, edge_amplitude2=a2, sharper=sharper)


def bifurcated_center_phase(z1: float, z2: float, lambda1: float) -> float:
    """Round-trip phase difference 4 pi |z2 - z1| / lambda1 at pattern center (rad).

    A quarter-wavelength branch separation yields exactly pi: the two
    reflections cancel at the center of the pattern.
    """
    if not lambda1 > 0.0:
        raise NonPositiveInput("lambda1 must be positive")
    return 4.0 * math.pi * (abs(z2 - z1) / lambda1)


# ---------------------------------------------------------------------------
# serialization

PATTERN_CSV_HEADER = "D_over_lambda1,E_A,E_B,I"


def pattern_to_csv(pat: Pattern, geom: ExperimentGeometry) -> str:
    """Render a pattern as CSV text with exact round-trip float formatting."""
    out = io.StringIO()
    out.write(PATTERN_CSV_HEADER + "\n")
    lam1 = geom.lambda1
    for j in range(pat.D_grid.size):
        out.write(f"{float(pat.D_grid[j] / lam1)!r},{float(pat.E_A[j])!r},"
                  f"{float(pat.E_B[j])!r},{float(pat.I[j])!r}\n")
    return out.getvalue()


def write_pattern_csv(pat: Pattern, geom: ExperimentGeometry, path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(pattern_to_csv(pat, geom))
