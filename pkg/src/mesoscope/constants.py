"""Physical constants in CGS-Gaussian units (cm, g, s, erg, K, G, statC).

Every number in this package is a plain float carrying its unit in the
field or argument name; there is no unit-conversion machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_PLANCK_H = 6.62607015e-27  # erg s


@dataclass(frozen=True)
class PhysicalConstants:
    planck_h: float = _PLANCK_H                       # erg s
    hbar: float = _PLANCK_H / (2.0 * math.pi)         # erg s
    light_speed_c: float = 2.99792458e10              # cm/s
    boltzmann_kB: float = 1.380649e-16                # erg/K
    stefan_boltzmann_sigma: float = 5.670374419e-5    # erg cm^-2 s^-1 K^-4
    electron_charge: float = 4.80320471e-10           # statC
    electron_mass: float = 9.1093837015e-28           # g
    amu: float = 1.66053906660e-24                    # g


CGS = PhysicalConstants()

# Not part of the core constant set; used only for mol/L conversions.
AVOGADRO = 6.02214076e23  # 1/mol

# Rubidium-85, the default background-gas species.
RUBIDIUM_85_AMU = 84.911789738
