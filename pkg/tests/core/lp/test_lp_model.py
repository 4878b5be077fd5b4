"""Tests for the Bellman linear program"""
import numpy as np
import pytest
from scipy.optimize import linprog

from core.bellman import value_iterate
from core.exceptions import DimensionMismatchError
from core.lp import build_lp, export_lp_text, export_mps_text, format_number, partition_indicator
from models.problem import ProblemData
from tests.test_utils.assertions import assert_vectors_close


@pytest.fixture
def single_node():
    return ProblemData.from_arrays(A=[[0.0]], B_blocks=[], E=np.zeros((0, 1)), s=[1.0], r_blocks=[])


class TestBuildLp:
    def test_routing_example_shape(self, example1):
        """Test row and variable counts"""
        model = build_lp(example1)
        assert model.num_vars == 8
        assert len(model.bellman_rows) == 4
        assert len(model.reduced_rows) == 10
        assert model.labels == ["p_1", "p_2", "p_3", "p_4", "z_1", "z_2", "z_3", "z_4"]
        assert model.objective == [1.0] * 4 + [0.0] * 4
        assert model.constraint_matrix().shape == (14, 8)

    def test_reduced_row_coefficients(self, example1):
        """Test -B'p - z <= r for the first input"""
        row = build_lp(example1).reduced_rows[0]
        assert row.name == "red_1_1"
        assert row.indices == [0, 1, 4]
        assert row.values == [1.0, -1.0, -1.0]
        assert row.rhs == 0.0

    def test_literal_sign(self, example1):
        """Test the alternative reduced-cost row orientation"""
        row = build_lp(example1, literal_sign=True).reduced_rows[2]
        assert row.name == "red_1_3"
        assert row.values == [-1.0, 1.0, -1.0]
        assert row.rhs == -2.0

    def test_without_partitions(self, single_node):
        """Test a model with only Bellman rows"""
        model = build_lp(single_node)
        assert model.M == 0 and model.num_vars == 1
        assert len(model.rows) == 1
        assert " bell_1: p_1 <= 1\n" in export_lp_text(model)

    def test_inconsistent_instance(self, example1):
        """Test refusal of mismatched shapes"""
        prob = ProblemData(n=4, M=4, A=np.eye(4), B_blocks=example1.B_blocks, E=np.eye(4, 5),
                           s=example1.s, r_blocks=example1.r_blocks)
        with pytest.raises(DimensionMismatchError):
            build_lp(prob)

    def test_partition_indicator(self, example1):
        """Test the column to partition map"""
        indicator = partition_indicator(example1).toarray()
        assert indicator.shape == (10, 4)
        assert_vectors_close(indicator.argmax(axis=1), [0, 0, 0, 1, 1, 2, 2, 3, 3, 3])


class TestExport:
    def test_lp_golden(self, example1, test_data_dir):
        """Test LP text against the stored file"""
        expected = (test_data_dir / "example1.lp").read_text()
        assert export_lp_text(build_lp(example1)) == expected

    def test_mps_golden(self, example1, test_data_dir):
        """Test MPS text against the stored file"""
        expected = (test_data_dir / "example1.mps").read_text()
        assert export_mps_text(build_lp(example1)) == expected

    def test_deterministic(self, cooling_problems):
        """Test byte-identical output on repeated export"""
        prob = cooling_problems[1]
        assert export_lp_text(build_lp(prob)) == export_lp_text(build_lp(prob))
        assert export_mps_text(build_lp(prob)) == export_mps_text(build_lp(prob))

    @pytest.mark.parametrize("value,text", [(1.0, "1"), (-0.0, "0"), (0.1, "0.10000000000000001"), (2.5, "2.5")])
    def test_number_format(self, value, text):
        """Test round-trip number formatting"""
        assert format_number(value) == text

    def test_fractional_coefficients(self, flow_pair):
        """Test coefficient printing for non-unit entries"""
        text = export_lp_text(build_lp(flow_pair))
        assert " bell_2: 0.5 p_2 + 0.5 z_2 <= 0.20000000000000001\n" in text
        assert " red_1_1: p_1 - 0.94999999999999996 p_2 - z_1 <= 0.20000000000000001\n" in text


class TestLpOptimum:
    def test_matches_fixed_point(self, cooling_problems):
        """Test that an LP solver recovers 1'p of the fixed point"""
        for prob in cooling_problems.values():
            p = value_iterate(prob, tol=1e-12).p
            model = build_lp(prob)
            result = linprog(
                -np.array(model.objective),
                A_ub=model.constraint_matrix(),
                b_ub=model.rhs(),
                bounds=[(0, None)] * model.num_vars,
                method="highs",
            )
            assert result.status == 0
            assert -result.fun == pytest.approx(p.sum(), rel=1e-6)
            assert_vectors_close(result.x[:prob.n], p, atol=1e-5)
