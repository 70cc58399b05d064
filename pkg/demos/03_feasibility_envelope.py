"""The thermal and gas-pressure envelope that makes the experiment hard.

Three ceilings compete while the packet spreads: radiated heat must not
leak position information (T_R), internal phonons must not outrun the
spreading (T_c), and the mirror's own thermal motion must stay within a
chosen multiple alpha of the spreading velocity (T_g).  The gas density
must also keep the spreading window collision-free.

Both evaluation modes are shown: the explicit physics formulas and the
folded reference-point coefficients (which baked in a rounded spreading
velocity, hence the few-percent to ~12% offsets).
"""

from dataclasses import replace

from mesoscope import default_config, feasibility_report
from mesoscope.feasibility import report_text

geom, mirror, env = default_config()

for mode in ("symbolic", "collapsed"):
    print(report_text(feasibility_report(mirror, geom, env, mode), mode))
    print()

print("== how the binding constraint moves with alpha ==")
print("alpha      T_g (K)        T_c (K)      binding")
for alpha in (1.0, 5.0, 50.0, 500.0, 2000.0):
    r = feasibility_report(mirror, geom, replace(env, alpha=alpha))
    print(f"{alpha:7.0f}  {r.T_g:.3e}    {r.T_c:.3e}   {r.binding_limit}")
print("(raising alpha relaxes the gas limit until the phonon cutoff binds)")

print("\n== wavelength scaling of the radiation ceiling ==")
print("lam1 (cm)   T_R symbolic (K)   T_R collapsed (K)")
for lam in (1e-7, 1e-6, 1e-5):
    g = replace(geom, lambda1=lam, mirror_diameter_W=2.5 * lam,
                slit_separation_S=2.29 * lam, slit_mirror_distance_L=2.5 * lam,
                lambda2=lam / 4.0, probe_aperture_Wa=lam)
    sym = feasibility_report(mirror, g, env, "symbolic").T_R
    col = feasibility_report(mirror, g, env, "collapsed").T_R
    print(f"{lam:.0e}     {sym:12.4e}     {col:12.4e}")
