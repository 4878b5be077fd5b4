"""Tests for validation of positivity assumptions"""
import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import InvalidInstanceError
from models.problem import (
    ProblemData,
    ValidationReport,
    Violation,
    check_assumption_a,
    check_assumption_b,
    is_feasible_input,
    lower_bound_matrix,
    require_valid,
    successor,
    validate,
)
from tests.conftest import example1_arrays
from tests.test_utils.assertions import assert_clean_report, assert_dirty_report
from tests.test_utils.instance_factory import random_feasible_input, random_instance


class TestValidationReport:
    def test_flags_follow_violations(self):
        """Test the report invariant"""
        with pytest.raises(ValueError):
            ValidationReport(assumption_b_ok=True, assumption_a_ok=True,
                             violations=[Violation(location="s[0]", description="x")])
        with pytest.raises(ValueError):
            ValidationReport(assumption_b_ok=False, assumption_a_ok=True, violations=[])


class TestAssumptionChecks:
    def test_example_passes(self, example1):
        """Test the routing example against both assumptions"""
        assert check_assumption_b(example1) == (True, [])
        assert check_assumption_a(example1) == (True, [])
        assert_clean_report(validate(example1))

    def test_negative_entry_outside_own_row(self):
        """Test a negative B_1 entry placed on row 2"""
        arrays = example1_arrays()
        arrays["B_blocks"][0] = arrays["B_blocks"][0].copy()
        arrays["B_blocks"][0][1, 1] = -1.0
        ok, violations = check_assumption_b(ProblemData.from_arrays(**arrays))
        assert not ok
        assert violations[0].indices == (0, 1, 1)

    def test_no_inputs_pass(self):
        """Test vacuous pass without partitions"""
        prob = ProblemData.from_arrays(A=[[0.5]], B_blocks=[], E=np.zeros((0, 1)), s=[1.0], r_blocks=[])
        assert check_assumption_b(prob)[0]
        assert check_assumption_a(prob)[0]

    def test_dynamics_too_weak(self):
        """Test A = 0.5 I against unit outflow"""
        arrays = example1_arrays()
        arrays["A"] = 0.5 * np.eye(4)
        ok, violations = check_assumption_a(ProblemData.from_arrays(**arrays))
        assert not ok
        assert {v.location for v in violations} == {f"A[{k},{k}]" for k in range(4)}

    def test_nonnegative_blocks_reduce_to_sign(self):
        """Test that nonnegative inputs only need A >= 0"""
        prob = ProblemData.from_arrays(A=[[0.0, 0.2], [0.0, 0.0]], B_blocks=[np.ones((2, 1))],
                                       E=[[3.0, 1.0]], s=[0, 0], r_blocks=[[1.0]])
        assert check_assumption_a(prob) == (True, [])

    def test_more_partitions_than_states(self):
        """Test the structural violation for M > n"""
        prob = ProblemData.from_arrays(A=[[1.0]], B_blocks=[np.zeros((1, 0))] * 2,
                                       E=np.ones((2, 1)), s=[1.0], r_blocks=[[], []])
        assert not check_assumption_b(prob)[0]
        assert not check_assumption_a(prob)[0]

    def test_tolerance(self):
        """Test the comparison slack"""
        arrays = example1_arrays()
        arrays["A"] = (1 - 1e-12) * np.eye(4)
        prob = ProblemData.from_arrays(**arrays)
        assert not check_assumption_a(prob)[0]
        assert check_assumption_a(prob, tau_cmp=1e-9)[0]


class TestValidate:
    def test_negative_state_cost(self):
        """Test sign violations"""
        arrays = example1_arrays()
        arrays["s"] = np.array([1, -1, 1, 0], dtype=float)
        assert_dirty_report(validate(ProblemData.from_arrays(**arrays)), "s[1]")

    def test_mismatched_e_columns(self):
        """Test dimension violations"""
        arrays = example1_arrays()
        prob = ProblemData(n=4, M=4, A=arrays["A"], B_blocks=arrays["B_blocks"],
                           E=np.eye(4, 5), s=arrays["s"], r_blocks=arrays["r_blocks"])
        report = validate(prob)
        assert_dirty_report(report, "E")
        assert not report.assumption_a_ok and not report.assumption_b_ok

    def test_deterministic(self, example1):
        """Test that equal data give equal reports"""
        assert validate(example1) == validate(example1)

    def test_require_valid_refuses(self, caplog):
        """Test refusal and override"""
        arrays = example1_arrays()
        arrays["s"] = np.array([1, -1, 1, 0], dtype=float)
        prob = ProblemData.from_arrays(**arrays)
        with caplog.at_level(logging.ERROR, logger="posiflow.validation"):
            with pytest.raises(InvalidInstanceError) as info:
                require_valid(prob)
        assert info.value.report is not None
        assert "s[1]" in caplog.text
        with caplog.at_level(logging.WARNING, logger="posiflow.validation"):
            report = require_valid(prob, allow_unsafe=True)
        assert not report.is_clean
        assert "positivity is not guaranteed" in caplog.text


@pytest.mark.slow
class TestPositivityInvariance:
    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_successors_stay_nonnegative(self, seed):
        """Test invariance of the positive orthant on random instances"""
        rng = np.random.default_rng(seed)
        prob = random_instance(rng)
        assert_clean_report(validate(prob))
        bound = lower_bound_matrix(prob)
        for _ in range(1000):
            x = rng.uniform(0.0, 3.0, size=prob.n) * (rng.uniform(size=prob.n) < 0.8)
            u = random_feasible_input(prob, x, rng)
            assert is_feasible_input(prob, x, u, tol=1e-12)
            nxt = successor(prob, x, u)
            assert np.all(nxt >= -1e-12)
            assert np.all(nxt >= bound @ x - 1e-9)
