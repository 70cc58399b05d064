"""Magnetic levitation trap sized to prepare the mirror's ground state.

The superconducting mirror floats on an oscillating field: the vertical
component induces a circulating current (the disk is modeled as a ring of
radius lambda1), and the radial component acts on that current to push the
mirror up.  The z-inhomogeneity of the field supplies the restoring force,
so the spring constant fixes the required field-gradient product and, given
how fast the field may vary near the mirror, the field magnitude itself.

Release must be fast against the spreading time and ideally against the
trap period; "much faster" is operationalized as a factor of 100, recorded
in the design output.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .config import ExperimentGeometry, MirrorSpec
from .constants import CGS
from .errors import NonPositiveInput
from .feasibility import folded_spreading_velocity
from .wavepacket import spreading_velocity

#: Fractional variation of the field over one wavelength near the mirror.
DEFAULT_GRADIENT_FRACTION = 0.25

#: Operationalization of "release much faster than spreading".
RELEASE_SPREAD_FACTOR = 100.0

_MODES = ("symbolic", "collapsed")


@dataclass(frozen=True)
class TrapDesign:
    k: float                    # spring constant, erg/cm^2
    omega_os: float             # trap angular frequency, rad/s
    N_atoms: float              # atoms in the mirror
    nu: float                   # Cooper pairs per lattice site
    eta: float                  # transverse/vertical field ratio
    gradient_fraction: float    # field variation over one wavelength
    grad_product: float         # B0 dB0/dz, G^2/cm
    B0: float                   # field magnitude at the mirror, G
    t_R_max_spread: float       # release-time bound from spreading, s
    t_R_max_oscillator: float   # release-time bound from the trap period, s


def design_trap(mirror: MirrorSpec, geom: ExperimentGeometry, nu: float, eta: float,
                gradient_fraction: float = DEFAULT_GRADIENT_FRACTION,
                mode: str = "symbolic") -> TrapDesign:
    """Size the trap for the given mirror, carrier density and field shape.

    ``collapsed`` mode drives the chain with the folded reference spreading
    velocity (3.8e-3 cm/s at the reference mirror) instead of the h-based
    value, reproducing the quoted reference-design numbers.
    """
    if mode not in _MODES:
        raise NonPositiveInput(f"mode must be one of {_MODES}, got {mode!r}")
    if not (nu > 0.0 and 0.0 < eta < 1.0):
        raise NonPositiveInput("need nu > 0 and 0 < eta < 1")
    if not (0.0 < gradient_fraction <= 1.0):
        raise NonPositiveInput("gradient_fraction must lie in (0, 1]")
    if mode == "collapsed":
        dv = folded_spreading_velocity(mirror)
    else:
        dv = spreading_velocity(mirror.delta_q_i, mirror.mass_M)
    M = mirror.mass_M
    lam1 = geom.lambda1
    k = M * (dv / mirror.delta_q_i) ** 2
    omega_os = math.sqrt(k / M)
    N_atoms = M / (mirror.atomic_weight_aw * CGS.amu)
    grad_product = (k * CGS.electron_mass * CGS.light_speed_c ** 2
                    / (2.0 * N_atoms * nu * eta * CGS.electron_charge ** 2 * lam1))
    # B0 dB0/dz = B0^2 * fraction / lambda1 near the mirror.
    B0 = math.sqrt(grad_product * lam1 / gradient_fraction)
    t_s = lam1 / dv
    return TrapDesign(
        k=k,
        omega_os=omega_os,
        N_atoms=N_atoms,
        nu=nu,
        eta=eta,
        gradient_fraction=gradient_fraction,
        grad_product=grad_product,
        B0=B0,
        t_R_max_spread=t_s / RELEASE_SPREAD_FACTOR,
        t_R_max_oscillator=2.0 * math.pi / omega_os,
    )


def grad_product_check(design: TrapDesign, nu: float, eta: float) -> float:
    """Field-gradient product the design's k would demand at carrier densities
    (nu, eta); scales exactly as 1/(nu eta) (G^2/cm)."""
    if not (nu > 0.0 and eta > 0.0):
        raise NonPositiveInput("nu and eta must be positive")
    return design.grad_product * (design.nu * design.eta) / (nu * eta)


def em_force(t: float, design: TrapDesign, B0: float, omega_drive: float,
             nu: float, eta: float, mirror: MirrorSpec,
             geom: ExperimentGeometry) -> float:
    """Upward force N nu eta (e^2 lambda1 / m_e c^2) B0^2 sin^2(w t) (dyn).

    The drive period should dwarf the spreading time so the lift is
    quasi-static over a run; a warning is emitted otherwise.
    """
    if not (omega_drive > 0.0 and B0 > 0.0 and nu > 0.0 and eta > 0.0):
        raise NonPositiveInput("omega_drive, B0, nu and eta must be positive")
    t_s = geom.lambda1 / spreading_velocity(mirror.delta_q_i, mirror.mass_M)
    if 2.0 * math.pi / omega_drive < 10.0 * t_s:
        warnings.warn("drive period is not large against the spreading time; "
                      "the lift will not be quasi-static", stacklevel=2)
    N_atoms = mirror.mass_M / (mirror.atomic_weight_aw * CGS.amu)
    coupling = (CGS.electron_charge ** 2 * geom.lambda1
                / (CGS.electron_mass * CGS.light_speed_c ** 2))
    s = math.sin(omega_drive * t)
    return N_atoms * nu * eta * coupling * B0 * B0 * s * s


@dataclass(frozen=True)
class ReleaseCheck:
    ok_spread: bool      # release faster than 1/100 of the spreading time
    ok_oscillator: bool  # release faster than one trap period


def release_check(t_R: float, design: TrapDesign) -> ReleaseCheck:
    """Check a field turn-off time against both release bounds."""
    if not t_R > 0.0:
        raise NonPositiveInput("t_R must be positive")
    return ReleaseCheck(
        ok_spread=t_R <= design.t_R_max_spread,
        ok_oscillator=t_R < design.t_R_max_oscillator,
    )


# ---------------------------------------------------------------------------
# serialization

DESIGN_CSV_HEADER = ("k_erg_cm2,omega_os_rad_s,N_atoms,nu,eta,gradient_fraction,"
                     "grad_product_G2_cm,B0_G,t_R_max_spread_s,t_R_max_oscillator_s")

_DESIGN_FIELDS = ("k", "omega_os", "N_atoms", "nu", "eta", "gradient_fraction",
                  "grad_product", "B0", "t_R_max_spread", "t_R_max_oscillator")


def design_csv_row(design: TrapDesign) -> str:
    return ",".join(repr(getattr(design, f)) for f in _DESIGN_FIELDS)


def design_text(design: TrapDesign, mode: str = "symbolic") -> str:
    lines = [
        f"Levitation trap design ({mode} mode)",
        f"  spring constant k           = {design.k:.6e} erg/cm^2",
        f"  oscillator frequency        = {design.omega_os:.6e} rad/s",
        f"  atoms in mirror N           = {design.N_atoms:.6e}",
        f"  Cooper pairs per site nu    = {design.nu:.6e}",
        f"  field ratio eta             = {design.eta:.6e}",
        f"  gradient fraction           = {design.gradient_fraction:.3f} per wavelength",
        f"  B0 dB0/dz                   = {design.grad_product:.6e} G^2/cm",
        f"  field magnitude B0          = {design.B0:.6e} G",
        f"  release bound (spreading)   = {design.t_R_max_spread:.6e} s",
        f"  release bound (trap period) = {design.t_R_max_oscillator:.6e} s",
        "  note: the mirror sees a brief strong electric field during the",
        "  turn-off; that exposure is not modeled here.",
    ]
    return "\n".join(lines)
