"""
Closed formulas for complete intersections.

For a complete intersection whose generators have degrees
d_1 <= ... <= d_r, the degree is the product of the d_i, the
regularity is the sum of (d_i - 1), and the footprint function has an
explicit value in terms of a block decomposition of d.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from src.exceptions import ValidationError


@dataclass(frozen=True)
class CIDecomposition:
    """d = sum_{i<=k} (d_i - 1) + ell with 1 <= ell <= d_{k+1} - 1 (k is 0-based)."""

    k: int
    ell: int


def _validate_degrees(degrees: Sequence[int]) -> None:
    if not degrees:
        raise ValidationError("At least one generator degree is required")
    if any(not isinstance(di, int) or di < 1 for di in degrees):
        raise ValidationError("Generator degrees must be positive integers", str(list(degrees)))
    if list(degrees) != sorted(degrees):
        raise ValidationError("Generator degrees must be sorted ascending", str(list(degrees)))


def ci_degree(degrees: Sequence[int]) -> int:
    _validate_degrees(sorted(degrees))
    return math.prod(degrees)


def ci_regularity(degrees: Sequence[int]) -> int:
    _validate_degrees(sorted(degrees))
    return sum(di - 1 for di in degrees)


def ci_decomposition(degrees: Sequence[int], d: int) -> Optional[CIDecomposition]:
    """
    The block decomposition of d, or None when d >= sum(d_i - 1).

    Degrees equal to 1 contribute empty blocks and are skipped.

    Raises:
        ValidationError: If degrees are not sorted positive integers or d < 1
    """
    _validate_degrees(degrees)
    if d < 1:
        raise ValidationError("Degree must be at least 1", str(d))
    if d >= ci_regularity(degrees):
        return None
    remaining = d
    for index, di in enumerate(degrees):
        if di == 1:
            continue
        if remaining <= di - 1:
            return CIDecomposition(index, remaining)
        remaining -= di - 1
    raise ValidationError("No block decomposition exists", f"d={d}, degrees={list(degrees)}")


def ci_fp_formula(degrees: Sequence[int], d: int) -> int:
    """
    Footprint (and minimum distance) of a complete intersection in degree d.

    Returns:
        int: (d_{k+1} - ell) * d_{k+2} * ... * d_r, or 1 once d reaches
        the regularity sum(d_i - 1)
    """
    decomposition = ci_decomposition(degrees, d)
    if decomposition is None:
        return 1
    k, ell = decomposition.k, decomposition.ell
    return (degrees[k] - ell) * math.prod(degrees[k + 1 :])


def product_inequality_holds(e: Sequence[int], b: Sequence[int], b0: int, k: int) -> bool:
    """
    Evaluate the product inequality behind the complete-intersection footprint formula.

    prod(e_i - b_i) >= (sum_{i<=k+1}(e_i - b_i) - (k - 1) - b0 - sum_{i>=k+2} b_i)
    * e_{k+2} * ... * e_m, with 1-based indices and 0 <= k <= m - 1.

    Raises:
        ValidationError: If the parameters violate 1 <= e_1 <= ... <= e_m,
        0 <= b_i <= e_i - 1, b0 >= 1 or 0 <= k <= m - 1
    """
    m = len(e)
    _validate_degrees(e)
    if len(b) != m:
        raise ValidationError("e and b must have the same length", f"{m} vs {len(b)}")
    for ei, bi in zip(e, b):
        if not 0 <= bi <= ei - 1:
            raise ValidationError(
                "Each b_i must satisfy 0 <= b_i <= e_i - 1", f"b_i={bi}, e_i={ei}"
            )
    if b0 < 1:
        raise ValidationError("b0 must be at least 1", str(b0))
    if not 0 <= k <= m - 1:
        raise ValidationError("k must satisfy 0 <= k <= m - 1", f"k={k}, m={m}")

    lhs = math.prod(ei - bi for ei, bi in zip(e, b))
    head = sum(ei - bi for ei, bi in zip(e[: k + 1], b[: k + 1]))
    rhs = (head - (k - 1) - b0 - sum(b[k + 1 :])) * math.prod(e[k + 1 :])
    return lhs >= rhs
