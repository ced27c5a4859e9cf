"""
Prime field arithmetic.

Elements of F_p are plain Python integers kept as canonical residues in [0, p).
"""

from dataclasses import dataclass
from typing import Iterator

from sympy import isprime

from src.exceptions import ValidationError


@dataclass(frozen=True)
class PrimeField:
    """The finite field F_p for a prime p."""

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise ValidationError("Field characteristic must be an integer", repr(self.p))
        if self.p < 2 or not isprime(self.p):
            raise ValidationError("Field characteristic must be prime", str(self.p))

    def element(self, value: int) -> int:
        """Return the canonical residue of value."""
        return value % self.p

    def inverse(self, value: int) -> int:
        """
        Return the multiplicative inverse of value.

        Args:
            value: A field element

        Returns:
            int: The inverse as a canonical residue

        Raises:
            ValidationError: If value is zero in F_p
        """
        value %= self.p
        if value == 0:
            raise ValidationError("Zero has no inverse", f"in F_{self.p}")
        return pow(value, -1, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    @property
    def order(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"F_{self.p}"
