"""
Tests for monomial ideals and Hilbert series data.
"""

import random

import pytest

from src.exceptions import DimensionError, SizeGuardError, ValidationError
from src.monomial_ideal import (
    MonomialIdeal,
    add_monomial,
    ci_profile,
    colon_by_monomial,
    colon_hilbert_data,
    height,
    hilbert_data,
    hilbert_function,
    is_prime,
    is_regular_extension,
    is_unmixed_squarefree,
    minimalize,
    monomials_of_degree,
    reduce_exponents,
    squarefree_associated_primes,
    standard_monomials,
    zero_divisor_standard_monomials,
)

FIVE_PRIMES_INITIAL = [
    (0, 0, 1, 1),
    (1, 0, 0, 1),
    (1, 0, 1, 0),
    (1, 1, 0, 0),
    (2, 0, 0, 0),
    (0, 2, 0, 1),
    (0, 2, 1, 0),
]


def random_monomial_ideal(rng: random.Random) -> MonomialIdeal:
    nvars = rng.randint(1, 4)
    count = rng.randint(1, 4)
    gens = []
    while len(gens) < count:
        a = tuple(rng.randint(0, 3) for _ in range(nvars))
        if any(a):
            gens.append(a)
    return MonomialIdeal.from_monomials(nvars, gens)


class TestMonomialIdeal:
    def test_minimal_generators(self):
        M = minimalize([(2, 0), (1, 0), (1, 1), (0, 3)])
        assert M.gens == ((0, 3), (1, 0))

    def test_minimalize_rejects_bad_input(self):
        with pytest.raises(ValidationError):
            minimalize([])
        with pytest.raises(ValidationError):
            minimalize([(0, 0), (1, 0)])
        with pytest.raises(DimensionError):
            minimalize([(1, 0), (1, 0, 0)])

    def test_contains_and_format(self):
        M = MonomialIdeal.from_monomials(3, [(0, 0, 2), (2, 1, 0)])
        assert M.contains((3, 1, 1))
        assert not M.contains((1, 1, 1))
        assert M.format() == "(t1^2*t2, t3^2)"

    def test_from_variables(self):
        M = MonomialIdeal.from_variables(3, [0, 2])
        assert is_prime(M)
        assert M.is_squarefree
        assert not is_prime(MonomialIdeal.from_monomials(2, [(1, 1)]))

    def test_add_monomial(self):
        M = add_monomial(MonomialIdeal.from_monomials(2, [(2, 0)]), (1, 0))
        assert M.gens == ((1, 0),)


class TestColonByMonomial:
    def test_example(self):
        M = MonomialIdeal.from_monomials(3, [(2, 1, 0), (0, 0, 2)])
        result = colon_by_monomial(M, (1, 0, 1))
        assert set(result.gens) == {(1, 1, 0), (0, 0, 1)}

    def test_regular_monomial(self):
        M = MonomialIdeal.from_monomials(3, [(2, 0, 0), (0, 3, 0)])
        assert colon_by_monomial(M, (0, 0, 4)) == M

    def test_colon_by_member_is_unit(self):
        M = MonomialIdeal.from_monomials(1, [(1,)])
        unit = colon_by_monomial(M, (2,))
        assert not unit.is_proper
        with pytest.raises(ValidationError):
            hilbert_data(unit)

    def test_rejects_bad_exponents(self):
        M = MonomialIdeal.from_monomials(2, [(1, 1)])
        with pytest.raises(DimensionError):
            colon_by_monomial(M, (1,))
        with pytest.raises(ValidationError):
            colon_by_monomial(M, (1, -1))


class TestStandardMonomials:
    def test_monomials_of_degree(self):
        assert monomials_of_degree(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        assert len(monomials_of_degree(3, 3)) == 10
        assert monomials_of_degree(2, -1) == []

    def test_standard_monomials(self):
        M = MonomialIdeal.from_monomials(2, [(2, 0), (0, 3)])
        assert standard_monomials(M, 2) == [(1, 1), (0, 2)]
        assert hilbert_function(M, 4) == 0

    def test_negative_degree(self):
        M = MonomialIdeal.from_monomials(2, [(2, 0)])
        with pytest.raises(ValidationError):
            standard_monomials(M, -1)

    def test_zero_divisors_of_five_primes(self):
        M = MonomialIdeal.from_monomials(4, FIVE_PRIMES_INITIAL)
        zero_divisors = zero_divisor_standard_monomials(M, 1)
        assert set(zero_divisors) == {(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}

    def test_zero_divisors_need_positive_degree(self):
        M = MonomialIdeal.from_monomials(2, [(2, 0)])
        with pytest.raises(ValidationError):
            zero_divisor_standard_monomials(M, 0)


class TestHilbertData:
    def test_complete_intersection(self):
        data = hilbert_data(MonomialIdeal.from_monomials(3, [(2, 0, 0), (0, 3, 0)]))
        assert data.numerator == (1, 2, 2, 1)
        assert data.dimension == 1
        assert data.degree == 6
        assert data.a_invariant == 2
        assert data.series(5) == [1, 3, 5, 6, 6, 6]

    def test_artinian(self):
        data = hilbert_data(MonomialIdeal.from_monomials(1, [(2,)]))
        assert data.dimension == 0
        assert data.degree == 2
        assert data.series(3) == [1, 1, 0, 0]
        assert data.hilbert_polynomial_value(5) == 0

    def test_single_variable(self):
        data = hilbert_data(MonomialIdeal.from_monomials(1, [(1,)]))
        assert (data.dimension, data.degree) == (0, 1)

    def test_five_primes_initial_ideal(self):
        data = hilbert_data(MonomialIdeal.from_monomials(4, FIVE_PRIMES_INITIAL))
        assert data.degree == 5
        assert data.dimension == 1
        assert data.series(4) == [1, 4, 5, 5, 5]

    def test_hypersurface_polynomial(self):
        """S/(t1*t2) in three variables has Hilbert polynomial 2d + 1."""
        data = hilbert_data(MonomialIdeal.from_monomials(3, [(1, 1, 0)]))
        assert data.dimension == 2
        assert data.degree == 2
        for d in range(1, 6):
            assert data.hilbert_polynomial_value(d) == 2 * d + 1

    @pytest.mark.parametrize("seed", range(25))
    def test_series_matches_counting(self, seed):
        M = random_monomial_ideal(random.Random(seed))
        data = hilbert_data(M)
        assert data.series(7) == [hilbert_function(M, d) for d in range(8)]

    @pytest.mark.parametrize("seed", range(25))
    def test_polynomial_agrees_past_a_invariant(self, seed):
        M = random_monomial_ideal(random.Random(seed))
        data = hilbert_data(M)
        start = max(data.a_invariant + 1, 0)
        for d in range(start, start + 3):
            assert data.hilbert_polynomial_value(d) == hilbert_function(M, d)


class TestCompleteIntersections:
    def test_ci_profile(self):
        profile = ci_profile(MonomialIdeal.from_monomials(3, [(0, 3, 0), (2, 0, 0)]))
        assert profile.is_ci
        assert profile.degrees == (2, 3)
        assert profile.height == 2

    def test_five_primes_is_not_ci(self):
        profile = ci_profile(MonomialIdeal.from_monomials(4, FIVE_PRIMES_INITIAL))
        assert not profile.is_ci
        assert profile.height == 3

    def test_height_guard(self):
        M = MonomialIdeal.from_variables(17, [0])
        with pytest.raises(SizeGuardError):
            height(M)

    def test_reduce_exponents(self):
        M = MonomialIdeal.from_monomials(4, [(1, 2, 0, 0), (0, 0, 2, 0)])
        a = (0, 1, 1, 2)
        beta = reduce_exponents(M, a)
        assert beta == (0, 1, 1, 0)
        assert colon_by_monomial(M, beta) == colon_by_monomial(M, a)

    def test_reduce_exponents_caps_at_generator(self):
        M = MonomialIdeal.from_monomials(2, [(3, 0), (0, 2)])
        assert reduce_exponents(M, (2, 1)) == (2, 1)

    def test_reduce_exponents_rejects_member(self):
        M = MonomialIdeal.from_monomials(2, [(2, 0), (0, 3)])
        with pytest.raises(ValidationError, match="lies in the ideal"):
            reduce_exponents(M, (1, 4))

    def test_reduce_exponents_rejects_regular(self):
        M = MonomialIdeal.from_monomials(3, [(2, 0, 0), (0, 3, 0)])
        with pytest.raises(ValidationError, match="regular"):
            reduce_exponents(M, (0, 0, 2))

    def test_reduce_exponents_requires_ci(self):
        M = MonomialIdeal.from_monomials(2, [(1, 1), (0, 2)])
        with pytest.raises(ValidationError, match="complete intersection"):
            reduce_exponents(M, (1, 0))


class TestAssociatedPrimes:
    def test_path_is_mixed(self):
        M = MonomialIdeal.from_monomials(3, [(1, 1, 0), (0, 1, 1)])
        assert squarefree_associated_primes(M) == [frozenset({1}), frozenset({0, 2})]
        assert not is_unmixed_squarefree(M)

    def test_matching_is_unmixed(self):
        M = MonomialIdeal.from_monomials(4, [(1, 1, 0, 0), (0, 0, 1, 1)])
        primes = squarefree_associated_primes(M)
        assert len(primes) == 4
        assert is_unmixed_squarefree(M)

    def test_not_squarefree(self):
        with pytest.raises(ValidationError):
            squarefree_associated_primes(MonomialIdeal.from_monomials(2, [(2, 0)]))

    def test_cover_guard(self):
        with pytest.raises(SizeGuardError):
            squarefree_associated_primes(MonomialIdeal.from_variables(21, [0]))


class TestSeriesArithmetic:
    def setup_method(self):
        # S/(t1^2) in k[t1, t2, t3] and its extensions by t3 and by t1
        self.base = hilbert_data(MonomialIdeal.from_monomials(3, [(2, 0, 0)]))
        self.by_t3 = hilbert_data(MonomialIdeal.from_monomials(3, [(2, 0, 0), (0, 0, 1)]))
        self.by_t1 = hilbert_data(MonomialIdeal.from_monomials(3, [(1, 0, 0)]))

    def test_regular_extension(self):
        """Test that adding a regular variable multiplies the series by 1 - x."""
        assert is_regular_extension(self.base, self.by_t3, 1)
        assert not is_regular_extension(self.base, self.by_t1, 1)

    def test_colon_of_regular_element(self):
        """Test that the colon by a regular element is the ideal itself."""
        assert colon_hilbert_data(self.base, self.by_t3, 1) == self.base

    def test_colon_of_zero_divisor(self):
        """Test (t1^2 : t1) = (t1) from the two series."""
        assert colon_hilbert_data(self.base, self.by_t1, 1) == self.by_t1

    def test_member_has_no_colon(self):
        with pytest.raises(ValidationError, match="lies in the ideal"):
            colon_hilbert_data(self.base, self.base, 2)

    def test_positive_degree_required(self):
        with pytest.raises(ValidationError):
            is_regular_extension(self.base, self.by_t3, 0)

    @pytest.mark.parametrize("seed", range(30))
    def test_agrees_with_monomial_colon(self, seed):
        """Test colon data against (M : t^a) for random monomial ideals."""
        rng = random.Random(seed)
        M = random_monomial_ideal(rng)
        a = tuple(rng.randint(0, 2) for _ in range(M.nvars))
        if M.contains(a) or not any(a):
            return
        base = hilbert_data(M)
        extended = hilbert_data(add_monomial(M, a))
        colon = colon_by_monomial(M, a)
        assert colon_hilbert_data(base, extended, sum(a)) == hilbert_data(colon)
        assert is_regular_extension(base, extended, sum(a)) == (colon == M)


def wide_monomial_ideal(rng: random.Random) -> MonomialIdeal:
    nvars = rng.randint(1, 5)
    count = rng.randint(1, 4)
    gens = []
    while len(gens) < count:
        a = tuple(rng.randint(0, 4) for _ in range(nvars))
        if any(a):
            gens.append(a)
    return MonomialIdeal.from_monomials(nvars, gens)


class TestHilbertSweep:
    def test_series_and_polynomial_on_random_ideals(self):
        """Test 200 random ideals in up to five variables, past the numerator degree."""
        rng = random.Random(1)
        for _ in range(200):
            M = wide_monomial_ideal(rng)
            data = hilbert_data(M)
            upto = len(data.numerator) - 1 + 5
            counted = [hilbert_function(M, d) for d in range(upto + 1)]
            assert data.series(upto) == counted
            for d in range(max(data.a_invariant + 1, 0), upto + 1):
                assert data.hilbert_polynomial_value(d) == counted[d]
