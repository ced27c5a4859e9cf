"""
Groebner bases and ideal operations.

Buchberger's algorithm with the normal selection strategy and the
Gebauer-Moeller pair criteria, reduced Groebner bases, initial ideals,
membership, equality, sums, intersections and colon ideals.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_div, monomial_lcm, monomial_mul

from src.exceptions import (
    InternalConsistencyError,
    NotGradedError,
    RingMismatchError,
    ValidationError,
    ZeroIdealError,
)
from src.field import PrimeField
from src.monomial_ideal import HilbertData, MonomialIdeal, hilbert_data
from src.polynomial import (
    EliminationOrder,
    Monomial,
    MonomialOrder,
    Polynomial,
    TermOrder,
    divide,
    remainder,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, interreduced, sorted by leading monomial."""

    order: TermOrder
    elements: Tuple[Polynomial, ...]

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if not self.elements:
            return f
        return remainder(f, self.elements, self.order)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.elements)


def _spoly(f: Polynomial, g: Polynomial, lmf: Monomial, lmg: Monomial) -> Polynomial:
    """S-polynomial of monic f and g."""
    lcm = monomial_lcm(lmf, lmg)
    return f.mul_monomial(monomial_div(lcm, lmf)) - g.mul_monomial(monomial_div(lcm, lmg))


def _update(
    lms: List[Monomial], pairs: Set[Pair], lmf: Monomial, order: TermOrder
) -> Set[Pair]:
    """Pair set after adding a polynomial with leading monomial lmf.

    Applies the Gebauer-Moeller criteria, which include Buchberger's
    coprime and chain criteria.
    """
    new_index = len(lms)

    kept = set()
    for i, j in pairs:
        lcm_ij = monomial_lcm(lms[i], lms[j])
        if (
            monomial_div(lcm_ij, lmf) is None
            or lcm_ij == monomial_lcm(lms[i], lmf)
            or lcm_ij == monomial_lcm(lms[j], lmf)
        ):
            kept.add((i, j))

    by_lcm: Dict[Monomial, List[int]] = {}
    for i, lm in enumerate(lms):
        by_lcm.setdefault(monomial_lcm(lm, lmf), []).append(i)

    minimal: List[Monomial] = []
    for lcm in sorted(by_lcm, key=order.key):
        if all(monomial_div(lcm, other) is None for other in minimal):
            minimal.append(lcm)

    for lcm in minimal:
        indices = by_lcm[lcm]
        if not any(lcm == monomial_mul(lms[i], lmf) for i in indices):
            kept.add((min(indices), new_index))
    return kept


def _minimalize(basis: List[Polynomial], order: TermOrder) -> List[Polynomial]:
    kept: List[Polynomial] = []
    kept_lms: List[Monomial] = []
    for f in sorted(basis, key=lambda h: order.key(h.leading_monomial(order))):
        lm = f.leading_monomial(order)
        if all(monomial_div(lm, other) is None for other in kept_lms):
            kept.append(f)
            kept_lms.append(lm)
    return kept


def _interreduce(basis: List[Polynomial], order: TermOrder) -> List[Polynomial]:
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        r = remainder(g, others, order) if others else g
        reduced.append(r.monic(order))
    return reduced


def _complete(
    basis: List[Polynomial], lms: List[Monomial], pairs: Set[Pair], order: TermOrder
) -> int:
    """Reduce S-pairs until none is left; returns the number of reductions."""

    def selection_key(pair: Pair) -> Tuple[int, object]:
        lcm = monomial_lcm(lms[pair[0]], lms[pair[1]])
        return sum(lcm), order.key(lcm)

    reductions = 0
    while pairs:
        pair = min(pairs, key=selection_key)
        pairs.remove(pair)
        i, j = pair
        s = _spoly(basis[i], basis[j], lms[i], lms[j])
        r = remainder(s, basis, order)
        reductions += 1
        if not r.is_zero:
            r = r.monic(order)
            lm = r.leading_monomial(order)
            pairs = _update(lms, pairs, lm, order)
            basis.append(r)
            lms.append(lm)
    return reductions


def _finish(basis: List[Polynomial], order: TermOrder) -> GroebnerBasis:
    reduced = _interreduce(_minimalize(basis, order), order)
    reduced.sort(key=lambda h: order.key(h.leading_monomial(order)), reverse=True)
    return GroebnerBasis(order, tuple(reduced))


def buchberger(gens: Sequence[Polynomial], order: TermOrder) -> GroebnerBasis:
    """
    Compute the reduced Groebner basis of the ideal generated by gens.

    Args:
        gens: Nonzero generators in one ring
        order: The monomial order

    Returns:
        GroebnerBasis: The reduced Groebner basis, sorted by decreasing
        leading monomial

    Raises:
        ZeroIdealError: If gens is empty
        RingMismatchError: If generators live in different rings
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ZeroIdealError("Cannot compute a Groebner basis of the zero ideal")
    first = gens[0]
    for g in gens[1:]:
        first._check_ring(g)

    basis: List[Polynomial] = []
    lms: List[Monomial] = []
    pairs: Set[Pair] = set()
    for g in gens:
        g = g.monic(order)
        lm = g.leading_monomial(order)
        pairs = _update(lms, pairs, lm, order)
        basis.append(g)
        lms.append(lm)

    reductions = _complete(basis, lms, pairs, order)
    result = _finish(basis, order)
    logger.debug(
        f"Groebner basis under {order}: {len(gens)} generators -> "
        f"{len(result)} elements after {reductions} reductions"
    )
    return result


def _grow(
    G: GroebnerBasis, f: Polynomial
) -> Optional[Tuple[List[Polynomial], List[Monomial]]]:
    """A Groebner basis of (G, f) and its leading monomials, or None if f is in (G).

    Pairs inside G already reduce to zero, so only pairs involving the
    normal form of f and later elements are formed.
    """
    r = G.normal_form(f)
    if r.is_zero:
        return None
    r = r.monic(G.order)
    basis = list(G.elements)
    lms = G.leading_monomials
    pairs = _update(lms, set(), r.leading_monomial(G.order), G.order)
    basis.append(r)
    lms.append(r.leading_monomial(G.order))
    _complete(basis, lms, pairs, G.order)
    return basis, lms


def extend_basis(G: GroebnerBasis, f: Polynomial) -> GroebnerBasis:
    """Reduced Groebner basis of (G, f) grown from the Groebner basis G."""
    grown = _grow(G, f)
    if grown is None:
        return G
    return _finish(grown[0], G.order)


def extended_initial_ideal(G: GroebnerBasis, f: Polynomial) -> MonomialIdeal:
    """in((G, f)), read off a grown basis without interreducing it."""
    grown = _grow(G, f)
    lms = G.leading_monomials if grown is None else grown[1]
    return MonomialIdeal.from_monomials(f.nvars, lms)


class Ideal:
    """An ideal of F_p[t_1, ..., t_s] given by generators.

    Reduced Groebner bases are computed on demand and cached per order.
    The zero ideal is represented by an empty generator list.
    """

    def __init__(self, field: PrimeField, nvars: int, generators: Sequence[Polynomial]):
        for g in generators:
            if g.field != field or g.nvars != nvars:
                raise RingMismatchError(
                    "Generator does not belong to the ideal's ring",
                    f"{g.field}[{g.nvars}] vs {field}[{nvars}]",
                )
            if g.is_zero:
                raise ValidationError("Ideal generators must be nonzero")
        self.field = field
        self.nvars = nvars
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        self._bases: Dict[TermOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_generators(cls, generators: Sequence[Polynomial]) -> "Ideal":
        if not generators:
            raise ZeroIdealError("Cannot infer the ring of an ideal without generators")
        return cls(generators[0].field, generators[0].nvars, generators)

    def __getstate__(self) -> Dict[str, object]:
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state: Dict[str, object]) -> None:
        self.__dict__.update(state)
        self._lock = threading.Lock()

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_graded(self) -> bool:
        return bool(self.generators) and all(g.is_homogeneous for g in self.generators)

    @property
    def is_monomial(self) -> bool:
        return bool(self.generators) and all(g.is_monomial for g in self.generators)

    def require_nonzero(self) -> None:
        if self.is_zero:
            raise ZeroIdealError("Operation requires a nonzero ideal")

    def require_graded(self) -> None:
        self.require_nonzero()
        if not self.is_graded:
            raise NotGradedError("Operation requires a graded ideal (homogeneous generators)")

    def same_ring(self, other: "Ideal") -> None:
        if self.field != other.field or self.nvars != other.nvars:
            raise RingMismatchError(
                "Ideals belong to different rings",
                f"{self.field}[{self.nvars}] vs {other.field}[{other.nvars}]",
            )

    def groebner_basis(self, order: TermOrder) -> GroebnerBasis:
        self.require_nonzero()
        with self._lock:
            basis = self._bases.get(order)
            if basis is None:
                basis = buchberger(self.generators, order)
                self._bases[order] = basis
            return basis

    def __repr__(self) -> str:
        gens = ", ".join(g.format() for g in self.generators)
        return f"Ideal({self.field}, s={self.nvars}, [{gens}])"


def initial_ideal(I: Ideal, order: TermOrder) -> MonomialIdeal:
    """
    The initial ideal in(I) generated by the leading monomials of the reduced basis.

    Raises:
        ZeroIdealError: If I is the zero ideal
    """
    basis = I.groebner_basis(order)
    return MonomialIdeal.from_monomials(I.nvars, basis.leading_monomials)


def membership(f: Polynomial, I: Ideal, order: TermOrder) -> bool:
    """True iff f reduces to zero modulo the reduced Groebner basis of I."""
    if f.field != I.field or f.nvars != I.nvars:
        raise RingMismatchError("Polynomial and ideal belong to different rings")
    if I.is_zero:
        return f.is_zero
    return I.groebner_basis(order).normal_form(f).is_zero


def ideal_equal(I: Ideal, J: Ideal, order: TermOrder) -> bool:
    """True iff I and J have identical reduced Groebner bases."""
    I.same_ring(J)
    if I.is_zero or J.is_zero:
        return I.is_zero and J.is_zero
    return I.groebner_basis(order).elements == J.groebner_basis(order).elements


def ideal_sum(I: Ideal, f: Polynomial, order: Optional[TermOrder] = None) -> Ideal:
    """The ideal (I, f).

    With an order, the basis of (I, f) under it is grown from the cached
    basis of I and stored on the result.
    """
    if f.is_zero:
        raise ValidationError("Cannot add the zero polynomial to an ideal")
    result = Ideal(I.field, I.nvars, I.generators + (f,))
    if order is not None and not I.is_zero:
        result._bases[order] = extend_basis(I.groebner_basis(order), f)
    return result


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """
    Intersection of two ideals by elimination of an auxiliary variable u.

    The ideal u*I + (1 - u)*J is eliminated with u greater than every t_i.
    """
    I.same_ring(J)
    I.require_nonzero()
    J.require_nonzero()
    u = (1,) + (0,) * I.nvars
    lifted = [g.extend(1).mul_monomial(u) for g in I.generators]
    for h in J.generators:
        h_up = h.extend(1)
        lifted.append(h_up - h_up.mul_monomial(u))
    basis = buchberger(lifted, EliminationOrder(1))
    gens = [g.drop_leading(1) for g in basis.elements if not any(m[0] for m in g.terms)]
    return Ideal(I.field, I.nvars, gens)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise ZeroIdealError("Cannot intersect an empty family of ideals")
    result = ideals[0]
    for other in ideals[1:]:
        result = intersect(result, other)
    return result


def colon(I: Ideal, f: Polynomial, order: TermOrder = MonomialOrder.GREVLEX) -> Ideal:
    """
    The colon ideal (I : f) = {h : h*f in I}.

    Computes I intersected with (f) by elimination and divides each
    generator exactly by f.

    Args:
        I: A nonzero ideal
        f: A nonzero homogeneous polynomial
        order: Order used for the postcondition membership check

    Returns:
        Ideal: Generators of (I : f)

    Raises:
        NotGradedError: If f is not homogeneous
        InternalConsistencyError: If an exact division leaves a remainder
    """
    if f.is_zero:
        raise ValidationError("Cannot take the colon by the zero polynomial")
    if not f.is_homogeneous:
        raise NotGradedError("Colon requires a homogeneous polynomial", f.format())
    I.require_nonzero()
    meet = intersect(I, Ideal(I.field, I.nvars, [f]))
    quotients = []
    for g in meet.generators:
        (q,), r = divide(g, [f], MonomialOrder.GREVLEX)
        if not r.is_zero:
            raise InternalConsistencyError(
                "Generator of the intersection is not divisible by f", g.format()
            )
        quotients.append(q)
    result = Ideal(I.field, I.nvars, quotients)
    for q in quotients:
        if not membership(q * f, I, order):
            raise InternalConsistencyError("Colon generator fails q*f in I", q.format())
    return result


def quotient_hilbert_data(I: Ideal, order: TermOrder) -> HilbertData:
    """Hilbert data of S/I, read from S/in(I)."""
    return hilbert_data(initial_ideal(I, order))


def quotient_degree(I: Ideal, order: TermOrder) -> int:
    return quotient_hilbert_data(I, order).degree


def quotient_dimension(I: Ideal, order: TermOrder) -> int:
    return quotient_hilbert_data(I, order).dimension


def monomial_ideal_to_ideal(M: MonomialIdeal, field: PrimeField) -> Ideal:
    """The polynomial ideal generated by the monomials of M."""
    return Ideal(field, M.nvars, [Polynomial.monomial(field, a) for a in M.gens])


def graded_order(order: Optional[TermOrder]) -> MonomialOrder:
    """Validate that order is one of the graded orders."""
    if not isinstance(order, MonomialOrder) or not order.is_graded:
        raise ValidationError("A graded monomial order is required", str(order))
    return order
