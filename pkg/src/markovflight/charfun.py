"""Characteristic functions of the flight position.

H_n is the characteristic function of X(t) conditioned on exactly n direction
switches; by isotropy each is a real radial function of x = c*t*||alpha||.
H_0 and H_1 have elementary closed forms, H_2 and H_3 are Bessel series, and
`h_asymptotic` combines the leading pieces of all four into the small-time
approximation of the unconditional characteristic function, accurate to
o(t^3) at fixed frequency.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonFinite, TruncationNotConverged
from .model import DEFAULT_TRUNCATION, FlightParams, SeriesTruncation
from .specfun import Order, bessel_j, log_gamma, neg_cin, si
from .arctan_series import quartic_gamma
from .specfun import hyp5f4_unit

__all__ = ["FreqQuery", "h0", "h1", "h2_series", "h3_series", "h_asymptotic"]

# Below this value of x = c*t*||alpha|| every H_n switches to its Taylor
# polynomial: the direct forms are 0/0 at x = 0 and the quartic truncation
# error is ~1e-14 at the cutoff.
_SMALL_X = 1e-3

_LOG2 = math.log(2.0)
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class FreqQuery:
    """Radial frequency ||alpha|| paired with the elapsed time t."""

    alpha_norm: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha_norm) and math.isfinite(self.t)):
            raise NonFinite("FreqQuery fields must be finite")
        if self.alpha_norm < 0:
            raise DomainError(f"alpha_norm must be >= 0, got {self.alpha_norm}")
        if self.t <= 0:
            raise DomainError(f"t must be > 0, got {self.t}")


def _x(q: FreqQuery, p: FlightParams) -> float:
    return p.c * q.t * q.alpha_norm


def h0(q: FreqQuery, p: FlightParams) -> float:
    """No-switch characteristic function sin(x)/x (uniform law on the sphere r = ct)."""
    x = _x(q, p)
    if x < _SMALL_X:
        xx = x * x
        return 1.0 - xx / 6.0 + xx * xx / 120.0
    return math.sin(x) / x


def h1(q: FreqQuery, p: FlightParams) -> float:
    """One-switch characteristic function [sin(x) Si(2x) + cos(x) negCin(2x)] / x^2.

    Independent of the switching intensity: given one switch, the epoch is
    uniform on (0, t) and only x matters.
    """
    x = _x(q, p)
    if x < _SMALL_X:
        xx = x * x
        return 1.0 - xx / 9.0 + 23.0 * xx * xx / 5400.0
    return (math.sin(x) * si(2.0 * x) + math.cos(x) * neg_cin(2.0 * x)) / (x * x)


def h2_series(
    q: FreqQuery, p: FlightParams, trunc: SeriesTruncation = DEFAULT_TRUNCATION
) -> float:
    """Two-switch characteristic function as a Bessel series.

    H_2 = sum_k x^(k-1) / (2^(k-1) k! (2k+1)^2) * F(k) * J_{k+1}(x), where
    F(k) is the terminating hypergeometric factor hyp5f4_unit(k).  Raises
    TruncationNotConverged if the term budget runs out before the tail
    tolerance is met.
    """
    x = _x(q, p)
    if x < _SMALL_X:
        xx = x * x
        return 1.0 - xx / 12.0 + 7.0 * xx * xx / 2700.0
    log_half_x = math.log(0.5 * x)
    total = 0.0
    for k in range(trunc.max_terms):
        coef = math.exp((k - 1) * log_half_x - log_gamma(k + 1.0)) / (2 * k + 1) ** 2
        term = coef * hyp5f4_unit(k) * bessel_j(Order.integer(k + 1), x)
        total += term
        if abs(term) < trunc.tail_tol:
            return total
    raise TruncationNotConverged(
        f"H2 series at x={x}: {trunc.max_terms} terms left tail above {trunc.tail_tol}"
    )


def h3_series(
    q: FreqQuery, p: FlightParams, trunc: SeriesTruncation = DEFAULT_TRUNCATION
) -> float:
    """Three-switch characteristic function as a half-integer Bessel series.

    H_3 = 3 pi^(3/2) sum_k gamma_k x^(k-3/2) / (2^(k+3/2) (k+1)!) * J_{k+3/2}(x)
    with the quartic_gamma coefficients.
    """
    x = _x(q, p)
    if x < _SMALL_X:
        xx = x * x
        return 1.0 - xx / 15.0 + 11.0 * xx * xx / 6300.0
    log_x = math.log(x)
    total = 0.0
    for k in range(trunc.max_terms):
        coef = (
            3.0
            * math.pi**1.5
            * quartic_gamma(k)
            * math.exp((k - 1.5) * log_x - (k + 1.5) * _LOG2 - log_gamma(k + 2.0))
        )
        term = coef * bessel_j(Order.half(k + 1), x)
        total += term
        if abs(term) < trunc.tail_tol:
            return total
    raise TruncationNotConverged(
        f"H3 series at x={x}: {trunc.max_terms} terms left tail above {trunc.tail_tol}"
    )


def h_asymptotic(q: FreqQuery, p: FlightParams) -> float:
    """Small-time approximation of the unconditional characteristic function.

    e^(-lam t) [ g0 + (lam t) g1 + (lam t)^2 J_1(x)/x
                 + (lam t)^3 sqrt(pi)/(2x)^(3/2) J_{3/2}(x) ]

    where g0 = H_0 and g1 = H_1.  The last two pieces are the leading Bessel
    terms of H_2 and H_3, so the whole expression deviates from the exact
    four-term conditional expansion by o(t^3) at fixed ||alpha||.  At zero
    frequency the value is exactly e^(-lam t)(1 + lt + lt^2/2 + lt^3/6).
    """
    x = _x(q, p)
    lt = p.lam * q.t
    if x < _SMALL_X:
        xx = x * x
        g0 = 1.0 - xx / 6.0 + xx * xx / 120.0
        g1 = 1.0 - xx / 9.0 + 23.0 * xx * xx / 5400.0
        g2 = 0.5 - xx / 16.0 + xx * xx / 384.0
        g3 = (1.0 - xx / 10.0 + xx * xx / 280.0) / 6.0
    else:
        g0 = math.sin(x) / x
        g1 = (math.sin(x) * si(2.0 * x) + math.cos(x) * neg_cin(2.0 * x)) / (x * x)
        g2 = bessel_j(Order.integer(1), x) / x
        g3 = _SQRT_PI / (2.0 * x) ** 1.5 * bessel_j(Order.half(1), x)
    return math.exp(-lt) * (g0 + lt * g1 + lt * lt * g2 + lt**3 * g3)
