"""Conditional characteristic functions and their small-time combination.

H_n is the characteristic function of the position given exactly n direction
switches; all of them are radial and depend only on x = ct ||alpha||.  The
truncated Poisson mixture of H_0..H_3 gives the small-time approximation of
the unconditional characteristic function, checked here against Monte Carlo.
"""
from markovflight import (
    FlightParams,
    FreqQuery,
    McConfig,
    estimate_cf,
    h0,
    h1,
    h2_series,
    h3_series,
    h_asymptotic,
)

p = FlightParams(c=5.0, lam=2.0)
t = 0.1

print("x = ct||alpha||   H0        H1        H2        H3")
for x in (0.3, 0.5, 1.0, 2.0, 3.0, 5.0):
    q = FreqQuery(alpha_norm=x / (p.c * t), t=t)
    print(
        f"  {x:<13.1f} {h0(q, p):9.6f} {h1(q, p):9.6f}"
        f" {h2_series(q, p):9.6f} {h3_series(q, p):9.6f}"
    )

# ordering is no accident: more switches concentrate the position near the
# origin, flattening the law and pushing its transform toward 1

alpha = 2.0
q = FreqQuery(alpha_norm=alpha, t=t)
approx = h_asymptotic(q, p)
est = estimate_cf(alpha, t, p, McConfig(samples=400_000, seed=20260814))

print(f"\nunconditional characteristic function at ||alpha|| = {alpha}, t = {t}")
print(f"  four-term approximation : {approx:.6f}")
print(f"  Monte Carlo (400k paths): {est.real.mean:.6f} +- {est.real.std_error:.6f}")
print(f"  imaginary part          : {est.imag.mean:+.6f} (zero in law)")
print(f"  gap                     : {abs(approx - est.real.mean):.2e}"
      f"  (o(t^3) budget 5t^3 = {5 * t**3:.2e})")
