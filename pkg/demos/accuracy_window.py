"""How long the three-term switch expansion stays trustworthy.

The law of the flight splits over the number of direction switches.  Keeping
terms up to three switches approximates the switched part g(t) = 1 - e^(-lam t)
by g~(t); the gap is exactly the Poisson tail P{N(t) >= 4}.  This script
tabulates the gap over t for several intensities and bisects for the largest
horizon at which the gap stays under one percent.
"""
from markovflight import FlightParams, g_exact, g_tilde, switch_tail_error


def horizon(lam: float, budget: float = 0.01) -> float:
    """Largest t with switch_tail_error below the budget, by bisection."""
    p = FlightParams(c=1.0, lam=lam)
    lo, hi = 0.0, 1.0
    while switch_tail_error(hi, p) < budget:
        hi *= 2.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if switch_tail_error(mid, p) < budget:
            lo = mid
        else:
            hi = mid
    return lo


lams = (1.0, 1.5, 2.0, 2.5)

print("gap(t) = P{N(t) >= 4} = g(t) - g~(t)\n")
header = "    t   " + "".join(f"  lam={lam:<10g}" for lam in lams)
print(header)
for t in (0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 1.0):
    row = f"  {t:5.2f} "
    for lam in lams:
        row += f"  {switch_tail_error(t, FlightParams(c=1.0, lam=lam)):14.6e}"
    print(row)

print("\nlargest t with gap < 0.01:")
for lam in lams:
    t_star = horizon(lam)
    p = FlightParams(c=1.0, lam=lam)
    print(f"  lam = {lam:<4g}  t* = {t_star:.6f}"
          f"   g = {g_exact(t_star, p):.6f}"
          f"   g~ = {g_tilde(t_star, p):.6f}")
