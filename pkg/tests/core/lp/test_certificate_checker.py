"""Tests for LP feasibility checks and optimality certificates"""
import numpy as np
import pytest

from core.bellman import bellman_residual, value_iterate
from core.exceptions import DimensionMismatchError
from core.lp import LpConfig, build_lp, certify_optimal, check_feasible
from tests.test_utils.assertions import assert_vectors_close
from tests.test_utils.instance_factory import random_instance, stable_instance

Z_STAR = [1.0, 1.0, 1.0, 0.0]


class TestCheckFeasible:
    def test_optimum_feasible(self, example1, example1_p):
        """Test the known optimum with its z"""
        result = check_feasible(build_lp(example1), example1_p, Z_STAR)
        assert result.feasible
        assert result.max_violation == 0.0
        assert result.worst is None

    def test_raised_cost_infeasible(self, example1, example1_p):
        """Test p* + e_1 violating the first reduced-cost row"""
        result = check_feasible(build_lp(example1), example1_p + np.eye(4)[0], Z_STAR)
        assert not result.feasible
        assert result.max_violation == pytest.approx(1.0)
        assert result.worst == "red_1_1"

    def test_origin_feasible(self, example1):
        """Test the zero point"""
        assert check_feasible(build_lp(example1), np.zeros(4), np.zeros(4)).feasible

    def test_negative_bound(self, example1):
        """Test the bound on z"""
        result = check_feasible(build_lp(example1), np.zeros(4), [0, -0.5, 0, 0])
        assert not result.feasible
        assert result.worst == "z_2"

    def test_tolerance(self, example1, example1_p):
        """Test the feasibility slack"""
        model = build_lp(example1)
        z = np.array(Z_STAR) + [1e-6, 0, 0, 0]
        assert not check_feasible(model, example1_p, z).feasible
        assert check_feasible(model, example1_p, z, LpConfig(tau_lp=1e-5)).feasible

    def test_wrong_lengths(self, example1):
        """Test point length checks"""
        with pytest.raises(DimensionMismatchError):
            check_feasible(build_lp(example1), np.zeros(3), np.zeros(4))


class TestCertifyOptimal:
    def test_certifies_optimum(self, example1, example1_p):
        """Test the certificate at the fixed point"""
        certificate = certify_optimal(example1, example1_p)
        assert certificate.certified
        assert certificate.tight_rows == ["bell_1", "bell_2", "bell_3", "bell_4"]
        assert_vectors_close(certificate.z, Z_STAR)
        assert not np.signbit(certificate.z).any()

    @pytest.mark.parametrize("node", [0, 1, 2])
    def test_raised_coordinate_infeasible(self, example1, example1_p, node):
        """Test that raising p on a routed node breaks feasibility"""
        p = example1_p + 1e-3 * np.eye(4)[node]
        certificate = certify_optimal(example1, p)
        assert not certificate.feasible
        assert not certificate.certified

    def test_raised_target_loses_tightness(self, example1, example1_p):
        """Test that raising the target's cost stays feasible but loosens rows"""
        certificate = certify_optimal(example1, example1_p + 1e-3 * np.eye(4)[3])
        assert certificate.feasible
        assert certificate.tight_rows == ["bell_1", "bell_4"]
        assert not certificate.certified

    def test_zero_vector(self, example1):
        """Test that zero is feasible but only tight where s vanishes"""
        certificate = certify_optimal(example1, np.zeros(4))
        assert certificate.feasible
        assert certificate.tight_rows == ["bell_4"]

    def test_fixed_points_certified(self):
        """Test certificates of converged value iteration on random instances"""
        rng = np.random.default_rng(17)
        checked = 0
        for _ in range(60):
            prob = random_instance(rng)
            report = value_iterate(prob, tol=1e-12, max_iter=20000, divergence_cap=1e8)
            if not report.converged:
                continue
            checked += 1
            assert certify_optimal(prob, report.p, LpConfig(tau_lp=1e-7)).certified
        assert checked > 0

    def test_perturbed_fixed_points_rejected(self):
        """Test that a vector with a large Bellman residual is never certified"""
        rng = np.random.default_rng(23)
        config = LpConfig(tau_lp=1e-7)
        checked = 0
        for _ in range(60):
            prob = stable_instance(rng)
            report = value_iterate(prob, tol=1e-12, max_iter=20000)
            if not report.converged:
                continue
            for scale in (1e-4, 1e-2, 1.0):
                p = report.p + rng.uniform(-scale, scale, size=prob.n)
                if bellman_residual(prob, p) <= prob.n * config.tau_lp:
                    continue
                checked += 1
                certificate = certify_optimal(prob, p, config)
                assert not certificate.certified
                assert not certificate.all_tight
        assert checked > 0
