"""Shape of the interior density at a small time.

The law of the position splits into a sphere atom (mass e^(-lam t), paths
that never switched) and an absolutely continuous part inside the ball
r < ct.  This script tabulates the small-time approximation of that interior
density along the radius: flat near the origin, then an explosive rise as r
approaches the ball boundary, driven by the inverse-square-root term.
"""
import numpy as np

from markovflight import FlightParams, ac_density, radial_profile, singular_weight

p = FlightParams(c=5.0, lam=2.0)
t = 0.1
ct = p.c * t

print(f"speed c = {p.c}, intensity lam = {p.lam}, t = {t}")
print(f"support: ball of radius ct = {ct}")
print(f"sphere atom mass e^(-lam t) = {singular_weight(t, p):.6f}\n")

profile = radial_profile(t, p, 11, 0.45)
print("  r       density")
for r, v in zip(profile.radii, profile.values):
    print(f"  {r:<7.3f} {v:.6f}")

print("\napproaching the boundary:")
for eps in (1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12):
    r = ct * (1.0 - eps)
    print(f"  r = ct(1 - {eps:.0e})   density = {ac_density(r, t, p):12.4f}")

# where the profile first passes 1000
lo, hi = 0.0, np.nextafter(ct, 0.0)
for _ in range(200):
    mid = 0.5 * (lo + hi)
    if ac_density(mid, t, p) < 1e3:
        lo = mid
    else:
        hi = mid
print(f"\ndensity passes 1e3 at r = ct(1 - {1.0 - hi / ct:.3e})")
