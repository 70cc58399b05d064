"""Composite Simpson quadrature with interval doubling.

The field integrands oscillate in z with a period of about half the
interfering wavelength, so the starting grid is chosen to put at least
~100 nodes on every oscillation and the interval count is doubled until
the integral stops moving.  Because the position densities are normalized
to unit mass and the oscillatory factor is bounded by one, the integrals
themselves are bounded by the scale factor; convergence is therefore
judged against max(|value|, scale) rather than |value| alone, which would
be unattainable near zero crossings of the field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidConfig, QuadratureNotConverged


@dataclass(frozen=True)
class QuadratureSettings:
    initial_intervals: int = 1024
    max_intervals: int = 2 ** 20
    rel_tolerance: float = 1e-8
    support_half_width_sigmas: float = 8.0

    def validated(self) -> "QuadratureSettings":
        v = []
        for name in ("initial_intervals", "max_intervals"):
            n = getattr(self, name)
            if n < 16 or (n & (n - 1)) != 0:
                v.append((name, "must be a power of two >= 16"))
        if not (0.0 < self.rel_tolerance <= 1e-4):
            v.append(("rel_tolerance", "must lie in (0, 1e-4]"))
        if not (self.support_half_width_sigmas >= 4.0):
            v.append(("support_half_width_sigmas", "must be >= 4"))
        if self.max_intervals < self.initial_intervals:
            v.append(("max_intervals", "must be >= initial_intervals"))
        if v:
            raise InvalidConfig(v)
        return self


def _next_power_of_two(n: int) -> int:
    p = 1
    while p < n:
        p *= 2
    return p


def starting_intervals(support_width: float, oscillation_length: float,
                       settings: QuadratureSettings) -> int:
    """Power-of-two interval count giving >= 200 nodes per oscillation length."""
    by_resolution = int(np.ceil(support_width / (oscillation_length / 200.0)))
    n = _next_power_of_two(max(settings.initial_intervals, by_resolution))
    return min(n, settings.max_intervals)


def composite_simpson(y: np.ndarray, h: float) -> float:
    """Composite Simpson rule over an even number of uniform intervals."""
    return (h / 3.0) * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def integrate_doubling(f, lo: float, hi: float, settings: QuadratureSettings,
                       n_start: int, scale: float = 1.0) -> tuple[float, int]:
    """Integrate f over [lo, hi], doubling intervals until converged.

    Returns ``(value, intervals_used)``.  Raises QuadratureNotConverged when
    the interval budget is exhausted.  ``scale`` is the a-priori bound on the
    integral magnitude used as the floor of the convergence denominator.
    """
    n = n_start
    tol = settings.rel_tolerance
    prev = None
    last_change = np.inf
    while n <= settings.max_intervals:
        x = np.linspace(lo, hi, n + 1)
        val = composite_simpson(f(x), (hi - lo) / n)
        if prev is not None:
            last_change = abs(val - prev)
            if last_change <= tol * max(abs(val), scale):
                return val, n
        prev = val
        n *= 2
    raise QuadratureNotConverged(n // 2, last_change, tol)
