"""
Projective points over F_p and their evaluation codes.

The minimum distance function of the vanishing ideal of a set X of
projective points equals the minimum distance of the code obtained by
evaluating degree-d forms on X, which gives an independent check of the
delta enumeration.
"""

import logging
from itertools import product
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from src.exceptions import ValidationError
from src.field import PrimeField
from src.groebner import Ideal, intersect_all
from src.invariants import EnumerationBudget
from src.monomial_ideal import monomials_of_degree
from src.polynomial import Polynomial

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


def projective_points(field: PrimeField, nvars: int) -> List[Point]:
    """All points of P^{nvars-1}(F_p), first nonzero coordinate equal to 1."""
    if nvars < 1:
        raise ValidationError("Projective space needs at least one coordinate", str(nvars))
    points = []
    for coords in product(range(field.p), repeat=nvars):
        if next((c for c in coords if c), 0) == 1:
            points.append(coords)
    return points


def _normalize(field: PrimeField, point: Sequence[int]) -> Point:
    coords = [field.element(c) for c in point]
    lead = next((c for c in coords if c), 0)
    if lead == 0:
        raise ValidationError("The zero vector is not a projective point")
    inv = field.inverse(lead)
    return tuple(c * inv % field.p for c in coords)


def point_ideal_forms(field: PrimeField, point: Sequence[int]) -> List[Polynomial]:
    """Linear forms t_i - a_i t_j generating the prime of [a], j the pivot coordinate."""
    a = _normalize(field, point)
    nvars = len(a)
    pivot = next(i for i, c in enumerate(a) if c)
    t_pivot = Polynomial.variable(field, nvars, pivot)
    return [
        Polynomial.variable(field, nvars, i) - t_pivot.scale(a[i])
        for i in range(nvars)
        if i != pivot
    ]


def vanishing_ideal(field: PrimeField, points: Sequence[Sequence[int]]) -> Ideal:
    """
    The vanishing ideal I(X) as the intersection of the point primes.

    Raises:
        ValidationError: If no points are given or a point has fewer than
            two coordinates
    """
    if not points:
        raise ValidationError("At least one point is required")
    nvars = len(points[0])
    if nvars < 2:
        raise ValidationError("Points need at least two coordinates")
    primes = [Ideal(field, nvars, point_ideal_forms(field, pt)) for pt in points]
    logger.debug(f"Intersecting {len(primes)} point ideals in {nvars} variables")
    return intersect_all(primes)


def code_length(points: Sequence[Sequence[int]]) -> int:
    return len(points)


def _evaluation_matrix(
    field: PrimeField, points: Sequence[Sequence[int]], d: int
) -> DomainMatrix:
    nvars = len(points[0])
    K = GF(field.p)
    rows = []
    for mono in monomials_of_degree(nvars, d):
        f = Polynomial.monomial(field, mono)
        rows.append([K(f.evaluate(_normalize(field, pt))) for pt in points])
    return DomainMatrix(rows, (len(rows), len(points)), K)


def _row_basis(field: PrimeField, points: Sequence[Sequence[int]], d: int) -> List[List[int]]:
    rref, pivots = _evaluation_matrix(field, points, d).rref()
    rows = rref.to_Matrix().tolist()[: len(pivots)]
    return [[int(c) % field.p for c in row] for row in rows]


def code_dimension(field: PrimeField, points: Sequence[Sequence[int]], d: int) -> int:
    """Dimension of the evaluation code in degree d, equal to H_{I(X)}(d)."""
    if d < 0:
        raise ValidationError("Degree must be non-negative", str(d))
    return len(_row_basis(field, points, d))


def evaluation_code_minimum_distance(
    field: PrimeField,
    points: Sequence[Sequence[int]],
    d: int,
    budget: Optional[EnumerationBudget] = None,
) -> int:
    """
    Minimum Hamming weight of the degree-d evaluation code on the points.

    Codewords are enumerated from a row basis, one per line through the
    origin.

    Raises:
        BudgetExceededError: If p^k - 1 exceeds the budget, k the code dimension
    """
    if not points:
        raise ValidationError("At least one point is required")
    if d < 1:
        raise ValidationError("Degree must be at least 1", str(d))
    budget = budget or EnumerationBudget()
    basis = _row_basis(field, points, d)
    budget.check(len(basis), field.p)

    best = len(points)
    for coeffs in product(range(field.p), repeat=len(basis)):
        if next((c for c in coeffs if c), 0) != 1:
            continue
        word = [
            sum(c * row[j] for c, row in zip(coeffs, basis)) % field.p
            for j in range(len(points))
        ]
        best = min(best, sum(1 for x in word if x))
    logger.debug(
        f"Code in degree {d}: length {len(points)}, dimension {len(basis)}, distance {best}"
    )
    return best
