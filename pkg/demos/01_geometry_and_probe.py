"""Bounce geometry, path-length differences and the probe collapse bound.

The interfering light leaves two slits, bounces off the mirror 2.5
wavelengths below, and lands on a screen between the slits.  The slit
separation is tuned so the first dark fringes sit exactly at the slits:
there a half-wavelength path difference separates the two bounce routes.
Moving the mirror along the optical axis shifts that difference, which is
the whole experimental signal.
"""

import math

from mesoscope import (default_config, pl_delta, probe_resolution,
                       recoil_displacement, round_trip_path,
                       solve_slit_separation)

geom, mirror, env = default_config()
lam1 = geom.lambda1
S = geom.slit_separation_S

print("== round-trip paths ==")
print(f"vertical bounce (z=0):        {round_trip_path(0.0, 0.0, geom) / lam1:.4f} lam1")
print(f"edge bounce (lateral = S):    {round_trip_path(0.0, S, geom) / lam1:.4f} lam1")

print("\n== path-length difference at the screen edge (D = S) ==")
print("z/lam1   PLdelta/lam1")
for z in (-lam1, 0.0, lam1):
    print(f"  {z / lam1:+.0f}     {pl_delta(z, S, geom).pl_delta / lam1:.4f}")
print("(a half-wave difference at z=0 marks the first node at the slit)")

print("\n== why S = 2.29 wavelengths ==")
s_star = solve_slit_separation(lam1 / 2.0, 0.0, geom)
print(f"separation solving PLdelta = lam1/2 at z=0: {s_star / lam1:.6f} lam1")
print(f"closed form sqrt(5.25):                     {math.sqrt(5.25):.6f}")

print("\n== probe collapse bound ==")
lam2 = geom.lambda2
bound = probe_resolution(lam2, geom.probe_angle_theta, geom.probe_aperture_Wa)
print(f"probe wavelength lam2 = lam1/4 = {lam2:.3e} cm")
print(f"detection confines the mirror to |z| <= {bound / lam1:.3f} lam1")

print("\n== probe recoil is harmless if timed tightly ==")
for dt in (1e-9, 1e-8, 1e-7):
    drift = recoil_displacement(lam2, mirror.mass_M, dt)
    print(f"probe-to-arrival delay {dt:.0e} s -> drift {drift:.3e} cm "
          f"({drift / lam1:.2e} lam1)")
