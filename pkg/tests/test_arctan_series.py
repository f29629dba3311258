"""Arctan power series and the gamma-sum identity against exact arithmetic.

The quartic coefficients gamma_k are rational multiples of 1/pi, so the
oracle computes the rational part with fractions.Fraction via
Gamma(m + 3/2) = sqrt(pi) (2m+2)! / (4^(m+1) (m+1)!).  The gamma-sum identity
is rebuilt term by term from Gamma(k+1/2) = sqrt(pi) (2k)!/(4^k k!), making
the left side pi times an exact rational for rational a.
"""
import math
from fractions import Fraction

import pytest

from markovflight import arctan_pow, gamma_sum_identity, quartic_gamma
from markovflight.errors import InvalidParameter, UnsupportedPower
from markovflight.model import SeriesTruncation


def gamma_half_rational(m: int) -> Fraction:
    """Gamma(m + 3/2) / sqrt(pi) as an exact rational."""
    return Fraction(math.factorial(2 * m + 2), 4 ** (m + 1) * math.factorial(m + 1))


def quartic_gamma_rational(k: int) -> Fraction:
    """quartic_gamma(k) * pi as an exact rational."""
    total = Fraction(0)
    for l in range(k + 1):
        total += Fraction(
            math.factorial(l) * math.factorial(k - l), l + 1
        ) / (gamma_half_rational(l) * gamma_half_rational(k - l))
    return total / (k + 2)


def gamma_sum_direct_rational(n: int, a: Fraction) -> Fraction:
    """The defining sum divided by pi, exactly, for rational a."""
    total = Fraction(0)
    for k in range(n + 1):
        # Gamma(k+1/2)Gamma(n-k+1/2) = pi (2k)!(2n-2k)! / (4^n k!(n-k)!)
        num = Fraction(
            math.factorial(2 * k) * math.factorial(2 * (n - k)),
            4**n * math.factorial(k) * math.factorial(n - k),
        )
        total += num / (math.factorial(k) * math.factorial(n - k)) / (2 * k + a)
    return total


class TestQuarticGamma:
    def test_gamma0_is_two_over_pi(self):
        assert quartic_gamma(0) == pytest.approx(2.0 / math.pi, abs=1e-14)

    @pytest.mark.parametrize("k", list(range(10)))
    def test_vs_rational_oracle(self, k):
        ref = float(quartic_gamma_rational(k)) / math.pi
        assert quartic_gamma(k) == pytest.approx(ref, rel=1e-13)

    def test_positive_decreasing(self):
        vals = [quartic_gamma(k) for k in range(40)]
        assert all(v > 0 for v in vals)
        assert all(a > b for a, b in zip(vals, vals[1:]))


class TestArctanPow:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_grid(self, n):
        for i in range(-30, 31):
            z = i / 10.0
            assert arctan_pow(n, z) == pytest.approx(math.atan(z) ** n, abs=1e-10)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_parity(self, n):
        for z in (0.4, 1.3, 2.7):
            assert arctan_pow(n, -z) == pytest.approx(
                (-1.0) ** n * arctan_pow(n, z), abs=1e-15
            )

    def test_zero(self):
        for n in (1, 2, 3, 4):
            assert arctan_pow(n, 0.0) == 0.0

    def test_unsupported_power(self):
        for n in (0, 5, -1):
            with pytest.raises(UnsupportedPower):
                arctan_pow(n, 1.0)

    def test_budget_exhaustion_is_silent(self):
        # past the designed range the series just returns its best partial sum
        out = arctan_pow(2, 10.0, SeriesTruncation(max_terms=30, tail_tol=0.0))
        assert math.isfinite(out)

    def test_tighter_truncation_converges(self):
        tight = SeriesTruncation(max_terms=400, tail_tol=1e-16)
        assert arctan_pow(4, 3.0, tight) == pytest.approx(math.atan(3.0) ** 4, abs=1e-12)


class TestGammaSumIdentity:
    @pytest.mark.parametrize("n", [0, 1, 2, 5, 11, 20])
    @pytest.mark.parametrize("a_num,a_den", [(1, 2), (1, 1), (2, 1), (7, 2)])
    def test_both_sides_vs_direct_sum(self, n, a_num, a_den):
        a = Fraction(a_num, a_den)
        ref = float(gamma_sum_direct_rational(n, a)) * math.pi
        lhs, rhs = gamma_sum_identity(n, float(a))
        assert lhs == pytest.approx(ref, rel=1e-12)
        assert rhs == pytest.approx(ref, rel=1e-12)

    def test_sides_agree(self):
        for n in range(21):
            for a in (0.5, 1.0, 2.0, 3.5):
                lhs, rhs = gamma_sum_identity(n, a)
                assert lhs == pytest.approx(rhs, rel=1e-11)

    def test_negative_non_integer_a(self):
        a = Fraction(-1, 2)
        ref = float(gamma_sum_direct_rational(3, a)) * math.pi
        lhs, rhs = gamma_sum_identity(3, float(a))
        assert lhs == pytest.approx(ref, rel=1e-11)
        assert rhs == pytest.approx(ref, rel=1e-11)

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameter):
            gamma_sum_identity(2, 0.0)
        with pytest.raises(InvalidParameter):
            gamma_sum_identity(2, -2.0)
        with pytest.raises(InvalidParameter):
            gamma_sum_identity(-1, 1.0)
