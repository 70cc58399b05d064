"""Sizing the magnetic levitation trap and checking the release timing.

The mirror must start the experiment in the ground state of a harmonic
well whose stiffness matches the target position/velocity uncertainty
product.  An oscillating field induces a supercurrent in the disk (modeled
as a ring); the field's radial component lifts the ring and its vertical
inhomogeneity provides the spring.  Given the Cooper-pair density and the
field geometry, that fixes the required field magnitude.
"""

import math

from mesoscope import default_config, design_trap, em_force, release_check
from mesoscope.trap import design_text, grad_product_check

geom, mirror, env = default_config()
NU, ETA = 1e-3, 1e-1

for mode in ("symbolic", "collapsed"):
    print(design_text(design_trap(mirror, geom, NU, ETA, mode=mode), mode))
    print()

design = design_trap(mirror, geom, NU, ETA)

print("== carrier density trade-off (only the product nu*eta matters) ==")
print("nu        eta      B0 dB0/dz (G^2/cm)")
for nu, eta in ((1e-3, 1e-1), (1e-2, 1e-2), (1e-4, 1.0 - 1e-9)):
    print(f"{nu:.0e}  {eta:.0e}   {grad_product_check(design, nu, eta):.4e}")

print("\n== lift force over one drive cycle ==")
omega = 2.0 * math.pi / (1000.0 * 100.0 * design.t_R_max_spread)  # slow drive
for frac in (0.0, 0.125, 0.25, 0.375, 0.5):
    t = frac * 2.0 * math.pi / omega
    f = em_force(t, design, design.B0, omega, NU, ETA, mirror, geom)
    print(f"t = {frac:5.3f} cycles -> F = {f:.4e} dyn")

print("\n== release timing ==")
for t_R in (1e-7, 1e-5, 1e-3):
    chk = release_check(t_R, design)
    print(f"t_R = {t_R:.0e} s: spreading bound "
          f"{'ok' if chk.ok_spread else 'VIOLATED'}, trap-period bound "
          f"{'ok' if chk.ok_oscillator else 'VIOLATED'}")
print(f"(bounds: {design.t_R_max_spread:.2e} s and "
      f"{design.t_R_max_oscillator:.2e} s)")
