"""
Tests for the complete-intersection closed formulas.
"""

import random

import pytest

from src.ci_formulas import (
    CIDecomposition,
    ci_decomposition,
    ci_degree,
    ci_fp_formula,
    ci_regularity,
    product_inequality_holds,
)
from src.exceptions import ValidationError


class TestDegreeAndRegularity:
    def test_values(self):
        assert ci_degree([2, 3]) == 6
        assert ci_regularity([2, 3]) == 3
        assert ci_degree([1, 1]) == 1
        assert ci_regularity([1, 1]) == 0

    def test_degree_accepts_any_order(self):
        assert ci_degree([3, 2]) == 6

    def test_invalid_degrees(self):
        for degrees in [[], [0, 2], [2, -1]]:
            with pytest.raises(ValidationError):
                ci_degree(degrees)


class TestDecomposition:
    def test_blocks(self):
        assert ci_decomposition([2, 3], 1) == CIDecomposition(0, 1)
        assert ci_decomposition([2, 3], 2) == CIDecomposition(1, 1)
        assert ci_decomposition([2, 3], 3) is None

    def test_linear_generators_are_skipped(self):
        assert ci_decomposition([1, 2, 2], 1) == CIDecomposition(1, 1)
        assert ci_decomposition([1, 2, 2], 2) is None

    def test_requires_sorted_degrees(self):
        with pytest.raises(ValidationError, match="sorted"):
            ci_decomposition([3, 2], 1)

    def test_requires_positive_degree(self):
        with pytest.raises(ValidationError):
            ci_decomposition([2, 3], 0)


class TestFootprintFormula:
    @pytest.mark.parametrize("d,expected", [(1, 3), (2, 2), (3, 1), (7, 1)])
    def test_two_generators(self, d, expected):
        assert ci_fp_formula([2, 3], d) == expected

    def test_single_generator(self):
        assert ci_fp_formula([2], 1) == 1
        assert ci_fp_formula([4], 1) == 3
        assert ci_fp_formula([4], 2) == 2

    def test_linear_forms_only(self):
        assert ci_fp_formula([1, 1], 1) == 1

    def test_three_generators(self):
        # d = 3 = (2-1) + (3-1): the block ends on the second generator
        assert ci_fp_formula([2, 3, 3], 1) == 9
        assert ci_fp_formula([2, 3, 3], 3) == 3
        assert ci_fp_formula([2, 3, 3], 4) == 2

    @pytest.mark.parametrize("seed", range(10))
    def test_decreasing_to_one(self, seed):
        rng = random.Random(seed)
        degrees = sorted(rng.randint(1, 5) for _ in range(rng.randint(1, 4)))
        values = [ci_fp_formula(degrees, d) for d in range(1, ci_regularity(degrees) + 2)]
        assert values[0] <= ci_degree(degrees)
        assert values[-1] == 1
        assert all(a > b for a, b in zip(values, values[1:]) if a > 1)


class TestProductInequality:
    def test_single_factor(self):
        assert product_inequality_holds([3], [1], 1, 0)

    def test_tight_case(self):
        assert product_inequality_holds([2, 2], [0, 0], 1, 0)

    def test_randomized(self):
        rng = random.Random(2815)
        for _ in range(10000):
            m = rng.randint(1, 5)
            e = sorted(rng.randint(1, 6) for _ in range(m))
            b = [rng.randint(0, ei - 1) for ei in e]
            assert product_inequality_holds(e, b, rng.randint(1, 4), rng.randint(0, m - 1))

    @pytest.mark.parametrize(
        "e,b,b0,k",
        [
            ([3, 2], [0, 0], 1, 0),
            ([3], [3], 1, 0),
            ([3], [0, 0], 1, 0),
            ([3], [0], 0, 0),
            ([3, 3], [0, 0], 1, 2),
        ],
    )
    def test_rejects_invalid_parameters(self, e, b, b0, k):
        with pytest.raises(ValidationError):
            product_inequality_holds(e, b, b0, k)
