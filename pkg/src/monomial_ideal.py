"""
Monomial ideals.

Minimal generators, monomial colon ideals, standard monomials, Hilbert
series data, complete-intersection detection, exponent reduction for
complete intersections, and associated primes of square-free ideals.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from sympy import ZZ, Poly, Symbol, ff
from sympy.polys.orderings import grevlex

from src.exceptions import DimensionError, SizeGuardError, ValidationError
from src.polynomial import default_names

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
VariableSet = FrozenSet[int]

HEIGHT_GUARD = 16
COVER_GUARD = 20

_X = Symbol("x")


def _divides(b: Monomial, a: Monomial) -> bool:
    return all(bi <= ai for bi, ai in zip(b, a))


def _support(a: Monomial) -> VariableSet:
    return frozenset(i for i, e in enumerate(a) if e)


def _minimal(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Divisibility-minimal subset, sorted by decreasing grevlex."""
    kept: List[Monomial] = []
    for m in sorted(set(monomials), key=lambda a: (sum(a), grevlex(a))):
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=grevlex, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The unit ideal is represented by the single zero exponent vector; it
    only arises as a colon and is rejected by operations that need a
    proper ideal.
    """

    nvars: int
    gens: Tuple[Monomial, ...]

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        monomials = [tuple(m) for m in monomials]
        for m in monomials:
            if len(m) != nvars:
                raise DimensionError(
                    "Exponent vector does not match the number of variables", f"{m} in {nvars}"
                )
        if not monomials:
            raise ValidationError("A monomial ideal needs at least one generator")
        return cls(nvars, _minimal(monomials))

    @classmethod
    def from_variables(cls, nvars: int, indices: Iterable[int]) -> "MonomialIdeal":
        gens = []
        for i in indices:
            exps = [0] * nvars
            exps[i] = 1
            gens.append(tuple(exps))
        return cls.from_monomials(nvars, gens)

    @property
    def is_proper(self) -> bool:
        return (0,) * self.nvars not in self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def require_proper(self) -> None:
        if not self.is_proper:
            raise ValidationError("Operation requires a proper monomial ideal")

    def contains(self, a: Monomial) -> bool:
        return any(_divides(g, a) for g in self.gens)

    def format(self) -> str:
        names = default_names(self.nvars)
        parts = []
        for g in self.gens:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, g) if e]
            parts.append("*".join(factors) if factors else "1")
        return "(" + ", ".join(parts) + ")"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series h(x)/(1-x)^k of S/M with h(1) > 0."""

    numerator: Tuple[int, ...]
    dimension: int
    degree: int
    a_invariant: int

    def series(self, upto: int) -> List[int]:
        """Hilbert function values H(0), ..., H(upto) from the series."""
        k = self.dimension
        values = []
        for d in range(upto + 1):
            if k == 0:
                values.append(self.numerator[d] if d < len(self.numerator) else 0)
                continue
            values.append(
                sum(
                    h * math.comb(d - i + k - 1, k - 1)
                    for i, h in enumerate(self.numerator)
                    if i <= d
                )
            )
        return values

    def hilbert_polynomial_value(self, d: int) -> int:
        """Value of the Hilbert polynomial at d."""
        k = self.dimension
        if k == 0:
            return 0
        scale = math.factorial(k - 1)
        total = sum(h * int(ff(d - i + k - 1, k - 1)) for i, h in enumerate(self.numerator))
        return total // scale


@dataclass(frozen=True)
class CIProfile:
    is_ci: bool
    degrees: Tuple[int, ...]
    height: int


def minimalize(monomials: Sequence[Sequence[int]]) -> MonomialIdeal:
    """
    Minimal generating set of the ideal generated by monomials.

    Raises:
        ValidationError: If the list is empty or contains the unit monomial
        DimensionError: If the vectors have different lengths
    """
    if not monomials:
        raise ValidationError("Cannot minimalize an empty list of monomials")
    nvars = len(monomials[0])
    if any(len(m) != nvars for m in monomials):
        raise DimensionError("Exponent vectors have different lengths")
    if any(not any(m) for m in monomials):
        raise ValidationError("The unit monomial generates the whole ring")
    return MonomialIdeal.from_monomials(nvars, monomials)


def colon_by_monomial(M: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """The colon ideal (M : t^a), generated by m_i / gcd(m_i, t^a)."""
    a = tuple(a)
    if len(a) != M.nvars:
        raise DimensionError("Exponent vector does not match the ideal", f"{a} in {M.nvars}")
    if any(e < 0 for e in a):
        raise ValidationError("Exponents must be non-negative", str(a))
    return MonomialIdeal(
        M.nvars, _minimal(tuple(max(g - e, 0) for g, e in zip(gen, a)) for gen in M.gens)
    )


def add_monomial(M: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """The monomial ideal (M, t^a)."""
    return MonomialIdeal.from_monomials(M.nvars, M.gens + (tuple(a),))


def is_prime(M: MonomialIdeal) -> bool:
    """True if M is generated by variables."""
    return M.is_proper and all(sum(g) == 1 for g in M.gens)


def monomials_of_degree(nvars: int, d: int) -> List[Monomial]:
    """All exponent vectors of total degree d, by decreasing grevlex."""
    if d < 0:
        return []
    result = []
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    result.sort(key=grevlex, reverse=True)
    return result


def standard_monomials(M: MonomialIdeal, d: int) -> List[Monomial]:
    """Degree-d monomials not divisible by any generator of M."""
    if d < 0:
        raise ValidationError("Degree must be non-negative", str(d))
    return [a for a in monomials_of_degree(M.nvars, d) if not M.contains(a)]


def hilbert_function(M: MonomialIdeal, d: int) -> int:
    return len(standard_monomials(M, d))


def _pairwise_disjoint(gens: Sequence[Monomial]) -> bool:
    seen: set = set()
    for g in gens:
        support = _support(g)
        if seen & support:
            return False
        seen |= support
    return True


def _choose_pivot(gens: Sequence[Monomial]) -> Monomial:
    """Generator with the highest power of the most frequent variable."""
    counts: Counter = Counter()
    for g in gens:
        counts.update(_support(g))
    variable = max(sorted(counts), key=lambda j: counts[j])
    return max((g for g in gens if g[variable]), key=lambda g: g[variable])


@lru_cache(maxsize=1 << 16)
def _series_numerator(gens: Tuple[Monomial, ...]) -> Poly:
    """N(x) with sum H(d) x^d = N(x) / (1-x)^s."""
    if not gens:
        return Poly(1, _X, domain=ZZ)
    if _pairwise_disjoint(gens):
        result = Poly(1, _X, domain=ZZ)
        for g in gens:
            result = result * Poly(1 - _X ** sum(g), _X, domain=ZZ)
        return result
    pivot = _choose_pivot(gens)
    rest = tuple(g for g in gens if g != pivot)
    colon_gens = _minimal(tuple(max(m - e, 0) for m, e in zip(g, pivot)) for g in rest)
    shifted = Poly(_X ** sum(pivot), _X, domain=ZZ) * _series_numerator(colon_gens)
    return _series_numerator(rest) - shifted


def hilbert_data(M: MonomialIdeal) -> HilbertData:
    """
    Hilbert series data of S/M.

    The numerator over (1-x)^s comes from the pivot recursion; factors of
    (1-x) are then cancelled while the numerator vanishes at 1.

    Returns:
        HilbertData: reduced numerator h, dimension k, degree h(1) and
        a-invariant deg(h) - k

    Raises:
        ValidationError: If M is the unit ideal
    """
    M.require_proper()
    return _reduced_data(_series_numerator(M.gens), M.nvars)


def _reduced_data(numerator: Poly, k: int) -> HilbertData:
    """Cancel (1-x) from numerator / (1-x)^k while the numerator vanishes at 1."""
    one_minus_x = Poly(1 - _X, _X, domain=ZZ)
    while numerator.eval(1) == 0:
        numerator = numerator.exquo(one_minus_x)
        k -= 1
    coeffs = tuple(int(c) for c in reversed(numerator.all_coeffs()))
    degree = int(numerator.eval(1))
    return HilbertData(coeffs, k, degree, (len(coeffs) - 1) - k)


def _numerator_poly(data: HilbertData) -> Poly:
    return Poly(list(reversed(data.numerator)), _X, domain=ZZ)


def is_regular_extension(base: HilbertData, extended: HilbertData, d: int) -> bool:
    """
    Decide from Hilbert series whether a form f of degree d is regular on S/I.

    base describes S/I and extended describes S/(I, f). The series of
    S/(I, f) is (1 - x^d) HS(S/I) + x^d HS((I : f)/I), so f is regular
    exactly when the second summand vanishes.
    """
    if d < 1:
        raise ValidationError("Degree must be at least 1", str(d))
    if extended.dimension != base.dimension - 1:
        return False
    block = Poly([1] * d, _X, domain=ZZ)
    return _numerator_poly(extended) == _numerator_poly(base) * block


def colon_hilbert_data(base: HilbertData, extended: HilbertData, d: int) -> HilbertData:
    """
    Hilbert data of S/(I : f) from those of S/I and S/(I, f), f of degree d.

    Uses HS(S/(I : f)) = x^-d (HS(S/I) - HS(S/(I, f))).

    Raises:
        ValidationError: If the two series agree, i.e. f lies in I
    """
    if d < 1:
        raise ValidationError("Degree must be at least 1", str(d))
    if extended.dimension > base.dimension:
        raise ValidationError("S/(I, f) cannot be larger than S/I")
    gap = base.dimension - extended.dimension
    difference = _numerator_poly(base) - _numerator_poly(extended) * Poly(
        (1 - _X) ** gap, _X, domain=ZZ
    )
    if difference.is_zero:
        raise ValidationError("The form lies in the ideal; its colon is the whole ring")
    shifted = difference.exquo(Poly(_X**d, _X, domain=ZZ))
    return _reduced_data(shifted, base.dimension)


def degree(M: MonomialIdeal) -> int:
    return hilbert_data(M).degree


def dimension(M: MonomialIdeal) -> int:
    return hilbert_data(M).dimension


def a_invariant(M: MonomialIdeal) -> int:
    return hilbert_data(M).a_invariant


def height(M: MonomialIdeal) -> int:
    """Least number of variables meeting every generator's support."""
    M.require_proper()
    if M.nvars > HEIGHT_GUARD:
        raise SizeGuardError("Height search is limited", f"s = {M.nvars} > {HEIGHT_GUARD}")
    supports = [_support(g) for g in M.gens]
    for size in range(1, M.nvars + 1):
        for subset in combinations(range(M.nvars), size):
            chosen = set(subset)
            if all(chosen & support for support in supports):
                return size
    return M.nvars


def ci_profile(M: MonomialIdeal) -> CIProfile:
    """
    Complete-intersection profile of M.

    M is a complete intersection iff its generators have pairwise
    disjoint supports and their number equals the height.
    """
    ht = height(M)
    degrees = tuple(sorted(sum(g) for g in M.gens))
    is_ci = _pairwise_disjoint(M.gens) and len(M.gens) == ht
    return CIProfile(is_ci, degrees, ht)


def zero_divisor_standard_monomials(M: MonomialIdeal, d: int) -> List[Monomial]:
    """Standard monomials t^a of degree d with (M : t^a) != M."""
    if d < 1:
        raise ValidationError("Degree must be at least 1", str(d))
    return [a for a in standard_monomials(M, d) if colon_by_monomial(M, a) != M]


def reduce_exponents(M: MonomialIdeal, a: Sequence[int]) -> Monomial:
    """
    Shrink a standard zero-divisor t^a of a monomial complete intersection.

    Variables regular on S/M are dropped and every other exponent is
    capped at the exponent of the unique generator containing that
    variable; the colon ideal does not change.

    Returns:
        Monomial: beta with t^beta | t^a and (M : t^a) = (M : t^beta)

    Raises:
        ValidationError: If M is not a complete intersection, t^a is in M,
        or t^a is regular on S/M
    """
    a = tuple(a)
    if len(a) != M.nvars:
        raise DimensionError("Exponent vector does not match the ideal", f"{a} in {M.nvars}")
    if not ci_profile(M).is_ci:
        raise ValidationError("Exponent reduction requires a complete intersection", str(M))
    if M.contains(a):
        raise ValidationError("Monomial lies in the ideal", str(a))
    if colon_by_monomial(M, a) == M:
        raise ValidationError("Monomial is regular on the quotient", str(a))

    owner = {}
    for g in M.gens:
        for j in _support(g):
            owner[j] = g
    beta = tuple(min(e, owner[j][j]) if j in owner else 0 for j, e in enumerate(a))
    return beta


def _minimal_transversals(edges: Sequence[VariableSet]) -> List[VariableSet]:
    found = set()

    def extend(chosen: VariableSet, remaining: List[VariableSet]) -> None:
        if not remaining:
            found.add(chosen)
            return
        edge = min(remaining, key=len)
        for v in sorted(edge):
            extend(chosen | {v}, [e for e in remaining if v not in e])

    extend(frozenset(), list(edges))
    minimal = [c for c in found if not any(other < c for other in found)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def squarefree_associated_primes(M: MonomialIdeal) -> List[VariableSet]:
    """
    Associated primes of a square-free monomial ideal.

    Each prime is returned as the set of 0-based variable indices
    generating it: the minimal vertex covers of the support hypergraph.

    Raises:
        ValidationError: If M is not square-free
        SizeGuardError: If s exceeds the cover guard
    """
    M.require_proper()
    if not M.is_squarefree:
        raise ValidationError("Associated primes are only computed for square-free ideals")
    if M.nvars > COVER_GUARD:
        raise SizeGuardError("Cover search is limited", f"s = {M.nvars} > {COVER_GUARD}")
    return _minimal_transversals([_support(g) for g in M.gens])


def is_unmixed_squarefree(M: MonomialIdeal) -> bool:
    return len({len(c) for c in squarefree_associated_primes(M)}) == 1
