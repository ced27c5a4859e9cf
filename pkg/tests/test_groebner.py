"""
Tests for Groebner bases and ideal operations.
"""

import random

import pytest
from sympy import Poly, groebner, symbols

from src.exceptions import NotGradedError, RingMismatchError, ValidationError, ZeroIdealError
from src.groebner import (
    Ideal,
    buchberger,
    colon,
    extend_basis,
    extended_initial_ideal,
    graded_order,
    ideal_equal,
    ideal_sum,
    initial_ideal,
    intersect,
    intersect_all,
    membership,
    monomial_ideal_to_ideal,
    quotient_degree,
    quotient_dimension,
    quotient_hilbert_data,
)
from src.monomial_ideal import MonomialIdeal, colon_by_monomial, monomials_of_degree
from src.polynomial import MonomialOrder, Polynomial, parse_polynomial

NAMES3 = ["t1", "t2", "t3"]


def reference_basis(ideal: Ideal, order: MonomialOrder):
    """Reduced basis from sympy, as a set of term maps with residues in [0, p)."""
    p = ideal.field.p
    syms = symbols(f"t1:{ideal.nvars + 1}")
    exprs = [Poly.from_dict(dict(g.terms), *syms).as_expr() for g in ideal.generators]
    basis = groebner(exprs, *syms, modulus=p, order=order.value)
    return {
        frozenset((tuple(m), int(c) % p) for m, c in poly.terms()) for poly in basis.polys
    }


def term_sets(basis):
    return {frozenset(g.terms.items()) for g in basis}


class TestBuchberger:
    @pytest.mark.parametrize(
        "p,texts",
        [
            (2, ["t1*t2^2 - t1^2*t2", "t1*t3^2 - t1^2*t3", "t2^2*t3 - t2*t3^2"]),
            (3, ["t1^2 - t2*t3", "t1*t2 - t3^2"]),
            (5, ["t1^2 + 2*t2^2 - t3^2", "t1*t2 + t2*t3", "t2^3 - t1*t3^2"]),
            (7, ["t1 + t2 + t3", "t1*t2 + t2*t3 + t1*t3", "t1*t2*t3 - 1"]),
        ],
    )
    @pytest.mark.parametrize("order", list(MonomialOrder))
    def test_matches_reference_basis(self, make_ideal, p, texts, order):
        ideal = make_ideal(p, NAMES3, texts)
        basis = ideal.groebner_basis(order)
        assert term_sets(basis) == reference_basis(ideal, order)

    def test_basis_is_monic_and_sorted(self, plane_ideal):
        order = MonomialOrder.GREVLEX
        basis = plane_ideal.groebner_basis(order)
        assert all(g.leading_coefficient(order) == 1 for g in basis)
        keys = [order.key(m) for m in basis.leading_monomials]
        assert keys == sorted(keys, reverse=True)

    def test_plane_leading_monomials(self, plane_ideal):
        basis = plane_ideal.groebner_basis(MonomialOrder.GREVLEX)
        assert set(basis.leading_monomials) == {(2, 1, 0), (2, 0, 1), (0, 2, 1)}

    def test_basis_is_cached_per_order(self, plane_ideal):
        first = plane_ideal.groebner_basis(MonomialOrder.GREVLEX)
        assert plane_ideal.groebner_basis(MonomialOrder.GREVLEX) is first
        assert plane_ideal.groebner_basis(MonomialOrder.LEX) is not first

    def test_unit_ideal(self, make_ideal):
        ideal = make_ideal(3, NAMES3, ["t1 + 1", "t1"])
        basis = ideal.groebner_basis(MonomialOrder.GREVLEX)
        assert len(basis) == 1
        assert basis.elements[0] == Polynomial.one(ideal.field, 3)

    def test_empty_generators(self):
        with pytest.raises(ZeroIdealError):
            buchberger([], MonomialOrder.GREVLEX)

    def test_mixed_rings(self, f2, f3):
        gens = [Polynomial.variable(f2, 2, 0), Polynomial.variable(f3, 2, 1)]
        with pytest.raises(RingMismatchError):
            buchberger(gens, MonomialOrder.GREVLEX)


class TestIdeal:
    def test_zero_generator_rejected(self, f3):
        with pytest.raises(ValidationError):
            Ideal(f3, 2, [Polynomial.zero(f3, 2)])

    def test_generator_from_other_ring(self, f2, f3):
        with pytest.raises(RingMismatchError):
            Ideal(f3, 2, [Polynomial.variable(f2, 2, 0)])

    def test_zero_ideal(self, f3):
        ideal = Ideal(f3, 2, [])
        assert ideal.is_zero
        assert not ideal.is_graded
        with pytest.raises(ZeroIdealError):
            ideal.groebner_basis(MonomialOrder.GREVLEX)

    def test_graded_and_monomial(self, make_ideal):
        assert make_ideal(3, NAMES3, ["t1*t2", "t3^2"]).is_monomial
        assert make_ideal(3, NAMES3, ["t1*t2 - t3^2"]).is_graded
        ungraded = make_ideal(3, NAMES3, ["t1*t2 - t3"])
        assert not ungraded.is_graded
        with pytest.raises(NotGradedError):
            ungraded.require_graded()

    def test_from_generators_needs_a_generator(self):
        with pytest.raises(ZeroIdealError):
            Ideal.from_generators([])


class TestInitialIdeal:
    def test_five_primes(self, five_primes_ideal):
        M = initial_ideal(five_primes_ideal, MonomialOrder.GREVLEX)
        assert set(M.gens) == {
            (0, 0, 1, 1),
            (1, 0, 0, 1),
            (1, 0, 1, 0),
            (1, 1, 0, 0),
            (2, 0, 0, 0),
            (0, 2, 0, 1),
            (0, 2, 1, 0),
        }

    def test_quotient_data_of_five_primes(self, five_primes_ideal):
        data = quotient_hilbert_data(five_primes_ideal, MonomialOrder.GREVLEX)
        assert data.degree == 5
        assert data.dimension == 1
        assert data.series(3) == [1, 4, 5, 5]

    def test_plane(self, plane_ideal):
        order = MonomialOrder.GREVLEX
        assert quotient_degree(plane_ideal, order) == 7
        assert quotient_dimension(plane_ideal, order) == 1

    def test_monomial_ideal_round_trip(self, f3):
        M = MonomialIdeal.from_monomials(3, [(2, 1, 0), (0, 0, 2)])
        assert initial_ideal(monomial_ideal_to_ideal(M, f3), MonomialOrder.LEX) == M


class TestMembershipAndEquality:
    def test_membership(self, plane_ideal):
        field = plane_ideal.field
        inside = parse_polynomial("t1^2*t2*t3 + t1*t2^2*t3", field, NAMES3)
        outside = parse_polynomial("t1^2*t2", field, NAMES3)
        assert membership(inside, plane_ideal, MonomialOrder.GREVLEX)
        assert not membership(outside, plane_ideal, MonomialOrder.GREVLEX)

    def test_membership_in_zero_ideal(self, f3):
        zero = Ideal(f3, 2, [])
        assert membership(Polynomial.zero(f3, 2), zero, MonomialOrder.LEX)
        assert not membership(Polynomial.one(f3, 2), zero, MonomialOrder.LEX)

    def test_membership_ring_mismatch(self, plane_ideal, f3):
        with pytest.raises(RingMismatchError):
            membership(Polynomial.one(f3, 3), plane_ideal, MonomialOrder.GREVLEX)

    def test_equal_for_different_generators(self, make_ideal):
        I = make_ideal(3, NAMES3, ["t1 - t2", "t2 - t3"])
        J = make_ideal(3, NAMES3, ["t1 - t3", "t1 + t2 + t3"])
        assert ideal_equal(I, J, MonomialOrder.GREVLEX)

    def test_not_equal(self, make_ideal):
        I = make_ideal(3, NAMES3, ["t1", "t2"])
        J = make_ideal(3, NAMES3, ["t1", "t3"])
        assert not ideal_equal(I, J, MonomialOrder.GREVLEX)

    def test_sum(self, make_ideal, f3):
        I = make_ideal(3, NAMES3, ["t1"])
        J = ideal_sum(I, Polynomial.variable(f3, 3, 1))
        assert ideal_equal(J, make_ideal(3, NAMES3, ["t2", "t1"]), MonomialOrder.LEX)
        with pytest.raises(ValidationError):
            ideal_sum(I, Polynomial.zero(f3, 3))


class TestIntersectAndColon:
    def test_intersect_of_variables(self, make_ideal):
        I = make_ideal(3, NAMES3, ["t1"])
        J = make_ideal(3, NAMES3, ["t2"])
        meet = intersect(I, J)
        assert ideal_equal(meet, make_ideal(3, NAMES3, ["t1*t2"]), MonomialOrder.GREVLEX)

    def test_intersect_all_of_point_ideals(self, make_ideal):
        """Two points of P^1 over F_3: [1:0] and [0:1]."""
        points = [make_ideal(3, ["t1", "t2"], ["t2"]), make_ideal(3, ["t1", "t2"], ["t1"])]
        meet = intersect_all(points)
        assert quotient_degree(meet, MonomialOrder.GREVLEX) == 2

    def test_intersect_all_empty(self):
        with pytest.raises(ZeroIdealError):
            intersect_all([])

    def test_colon_of_monomial_ideal(self, make_ideal, f3):
        I = make_ideal(3, NAMES3, ["t1^2*t2", "t3^2"])
        f = Polynomial.monomial(f3, (1, 0, 1))
        expected = make_ideal(3, NAMES3, ["t1*t2", "t3"])
        assert ideal_equal(colon(I, f), expected, MonomialOrder.GREVLEX)

    def test_colon_of_plane_by_variable(self, plane_ideal):
        t1 = Polynomial.variable(plane_ideal.field, 3, 0)
        assert quotient_degree(colon(plane_ideal, t1), MonomialOrder.GREVLEX) == 4

    def test_colon_of_five_primes(self, five_primes_ideal):
        t1 = Polynomial.variable(five_primes_ideal.field, 4, 0)
        assert quotient_degree(colon(five_primes_ideal, t1), MonomialOrder.GREVLEX) == 2

    def test_colon_by_regular_element(self, make_ideal, f3):
        I = make_ideal(3, NAMES3, ["t1^2", "t2^3"])
        t3 = Polynomial.variable(f3, 3, 2)
        assert ideal_equal(colon(I, t3), I, MonomialOrder.GREVLEX)

    def test_colon_rejects_inhomogeneous(self, make_ideal, f3):
        I = make_ideal(3, NAMES3, ["t1^2"])
        with pytest.raises(NotGradedError):
            colon(I, parse_polynomial("t1 + 1", f3, NAMES3))

    def test_colon_rejects_zero(self, make_ideal, f3):
        I = make_ideal(3, NAMES3, ["t1^2"])
        with pytest.raises(ValidationError):
            colon(I, Polynomial.zero(f3, 3))


class TestGradedOrder:
    def test_graded_orders_pass(self):
        assert graded_order(MonomialOrder.GREVLEX) is MonomialOrder.GREVLEX
        assert graded_order(MonomialOrder.GRLEX) is MonomialOrder.GRLEX

    def test_lex_rejected(self):
        with pytest.raises(ValidationError):
            graded_order(MonomialOrder.LEX)


class TestExtendBasis:
    @pytest.mark.parametrize("order", list(MonomialOrder))
    def test_matches_basis_from_scratch(self, plane_ideal, order):
        """Test that growing a basis gives the reduced basis of the sum."""
        f = parse_polynomial("t1*t2 + t3^2", plane_ideal.field, NAMES3)
        grown = extend_basis(plane_ideal.groebner_basis(order), f)
        scratch = buchberger(plane_ideal.generators + (f,), order)
        assert grown.elements == scratch.elements

    def test_member_leaves_basis_unchanged(self, plane_ideal):
        basis = plane_ideal.groebner_basis(MonomialOrder.GREVLEX)
        assert extend_basis(basis, basis.elements[0].scale(1)) is basis

    def test_sum_with_order_is_seeded(self, plane_ideal):
        """Test that ideal_sum stores the grown basis on the result."""
        t1 = Polynomial.variable(plane_ideal.field, 3, 0)
        J = ideal_sum(plane_ideal, t1, MonomialOrder.GREVLEX)
        assert MonomialOrder.GREVLEX in J._bases
        assert ideal_equal(J, ideal_sum(plane_ideal, t1), MonomialOrder.GREVLEX)
        assert quotient_degree(J, MonomialOrder.GREVLEX) == 3

    @pytest.mark.parametrize("seed", range(10))
    def test_initial_ideal_without_interreduction(self, five_primes_ideal, seed):
        """Test the initial ideal of a grown basis against the reduced basis of the sum."""
        rng = random.Random(seed)
        order = MonomialOrder.GREVLEX
        f = random_form(rng, five_primes_ideal.field, 4, rng.randint(1, 2))
        expected = initial_ideal(ideal_sum(five_primes_ideal, f), order)
        assert extended_initial_ideal(five_primes_ideal.groebner_basis(order), f) == expected

    def test_initial_ideal_of_a_member(self, plane_ideal):
        order = MonomialOrder.GREVLEX
        basis = plane_ideal.groebner_basis(order)
        assert extended_initial_ideal(basis, basis.elements[0]) == initial_ideal(
            plane_ideal, order
        )


def random_form(rng, field, nvars, degree, terms=3):
    monomials = monomials_of_degree(nvars, degree)
    chosen = {rng.choice(monomials): rng.randint(1, field.p - 1) for _ in range(terms)}
    return Polynomial(field, nvars, chosen)


class TestRandomizedColon:
    @pytest.mark.parametrize("seed", range(12))
    def test_regular_leading_monomial_gives_regular_element(self, make_ideal, seed):
        """Test that a leading monomial regular on S/in(I) makes f regular on S/I."""
        rng = random.Random(seed)
        I = make_ideal(3, NAMES3, ["t2^2 + t2*t3", "t2*t3^2 - t3^3"])
        order = MonomialOrder.GREVLEX
        M = initial_ideal(I, order)
        checked = 0
        for _ in range(10):
            f = random_form(rng, I.field, 3, rng.randint(1, 2))
            if colon_by_monomial(M, f.leading_monomial(order)) != M:
                continue
            assert ideal_equal(colon(I, f), I, order)
            checked += 1
        assert checked > 0

    @pytest.mark.parametrize("seed", range(12))
    def test_colon_agrees_with_monomial_colon(self, f3, seed):
        """Test the elimination colon against the monomial formula."""
        rng = random.Random(seed)
        gens = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(3)]
        gens = [g for g in gens if any(g)] or [(1, 0, 0)]
        M = MonomialIdeal.from_monomials(3, gens)
        a = tuple(rng.randint(0, 2) for _ in range(3))
        if M.contains(a):
            a = (0, 0, 0)
        result = colon(monomial_ideal_to_ideal(M, f3), Polynomial.monomial(f3, a))
        expected = monomial_ideal_to_ideal(colon_by_monomial(M, a), f3)
        assert ideal_equal(result, expected, MonomialOrder.GREVLEX)
