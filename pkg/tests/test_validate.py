"""Quadrature oracles and the cross-check suite machinery."""
import math

import pytest

from markovflight import (
    CheckReport,
    FlightParams,
    McConfig,
    ball_prob_asymptotic,
    g_tilde,
    integrate_ac_density,
    integrate_ac_density_ball,
    report_lines,
    reports_to_csv,
    run_suite,
)
from markovflight.errors import DomainError, QuadratureNotConverged, RadiusOutsideBall
from markovflight.validate import _quad

P = FlightParams(c=5.0, lam=2.0)


class TestCheckReport:
    def test_consistent_pass(self):
        r = CheckReport("x", 1.0, 1.0 + 1e-12, 1e-10, True)
        assert r.passed

    def test_consistent_fail(self):
        r = CheckReport("x", 1.0, 2.0, 1e-10, False)
        assert not r.passed

    def test_inconsistent_flag_rejected(self):
        with pytest.raises(DomainError):
            CheckReport("x", 1.0, 2.0, 1e-10, True)
        with pytest.raises(DomainError):
            CheckReport("x", 1.0, 1.0, 1e-10, False)

    def test_nan_must_fail(self):
        r = CheckReport("x", math.nan, 0.0, 1.0, False)
        assert not r.passed
        with pytest.raises(DomainError):
            CheckReport("x", math.nan, 0.0, 1.0, True)


class TestIntegrateAcDensity:
    # exact targets: each bracket term integrates over the ball to a bare
    # power of lam t, and the full integral carries the atom weight
    @pytest.mark.parametrize("lam", [1.0, 1.5, 2.0, 2.5])
    @pytest.mark.parametrize("t", [0.1, 0.3, 0.5])
    def test_termwise_targets(self, lam, t):
        p = FlightParams(c=5.0, lam=lam)
        lt = lam * t
        assert integrate_ac_density(t, p, term="log") == pytest.approx(lt, abs=1e-8)
        assert integrate_ac_density(t, p, term="sqrt") == pytest.approx(
            lt * lt / 2.0, abs=1e-8
        )
        assert integrate_ac_density(t, p, term="const") == pytest.approx(
            lt**3 / 6.0, abs=1e-10
        )

    def test_full_integral_is_g_tilde(self):
        for t in (0.1, 0.4):
            assert integrate_ac_density(t, P) == pytest.approx(
                g_tilde(t, P), abs=1e-6
            )

    def test_invalid_term(self):
        with pytest.raises(DomainError):
            integrate_ac_density(0.1, P, term="cubic")

    def test_invalid_tol(self):
        with pytest.raises(DomainError):
            integrate_ac_density(0.1, P, tol=0.0)


class TestIntegrateAcDensityBall:
    def test_matches_series(self):
        for ratio in (0.2, 0.5, 0.8, 0.95):
            r = ratio * P.c * 0.1
            assert integrate_ac_density_ball(r, 0.1, P) == pytest.approx(
                ball_prob_asymptotic(r, 0.1, P), abs=1e-6
            )

    def test_radius_domain(self):
        with pytest.raises(RadiusOutsideBall):
            integrate_ac_density_ball(0.5, 0.1, P)
        with pytest.raises(DomainError):
            integrate_ac_density_ball(0.0, 0.1, P)


class TestQuad:
    def test_quadrature_not_converged(self):
        f = lambda x: 1.0 if x < math.pi / 10.0 else 0.0
        with pytest.raises(QuadratureNotConverged):
            _quad(f, 0.0, 1.0, 1e-15)


class TestRunSuite:
    def test_quick_suite_all_pass(self):
        reports = run_suite(quick=True)
        assert len(reports) >= 30
        failed = [r.name for r in reports if not r.passed]
        assert failed == []

    def test_quick_suite_deterministic(self):
        a = run_suite(quick=True)
        b = run_suite(quick=True)
        assert a == b

    def test_small_mc_suite_all_pass(self):
        cfg = McConfig(samples=10**5, seed=20260814)
        reports = run_suite(cfg=cfg)
        failed = [r.name for r in reports if not r.passed]
        assert failed == []
        names = {r.name for r in reports}
        assert "mc_conditional_cf_n3_x2" in names
        assert "mc_worker_invariance" in names

    def test_report_lines_format(self):
        reports = run_suite(quick=True)
        lines = report_lines(reports)
        assert len(lines) == len(reports)
        assert all(line.startswith(("PASS ", "FAIL ")) for line in lines)

    def test_csv_format(self):
        reports = run_suite(quick=True)
        csv = reports_to_csv(reports)
        rows = csv.strip().split("\n")
        assert rows[0] == "name,lhs,rhs,tolerance,passed"
        assert len(rows) == len(reports) + 1
        assert rows[1].endswith(("true", "false"))
