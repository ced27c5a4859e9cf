"""
Sparse multivariate polynomials over prime fields.

This module provides exponent vectors, the graded monomial orders used
throughout the package, the Polynomial type, and the multivariate
division algorithm. Products, leading terms and division run on sympy's
sparse polynomial rings over GF(p); Polynomial keeps the plain term map
as its public face.
"""

import re
from dataclasses import dataclass, field as dataclass_field
from enum import Enum, IntEnum
from functools import cached_property, lru_cache
from operator import itemgetter
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import GF
from sympy.polys.monomials import monomial_mul
from sympy.polys.orderings import MonomialOrder as SympyOrder
from sympy.polys.orderings import ProductOrder, grevlex, grlex, lex
from sympy.polys.rings import PolyElement, PolyRing

from src.exceptions import DimensionError, RingMismatchError, ValidationError
from src.field import PrimeField

Monomial = Tuple[int, ...]


def monomial_degree(a: Monomial) -> int:
    """Total degree of t^a."""
    return sum(a)


def divides(b: Monomial, a: Monomial) -> bool:
    """Return True if t^b divides t^a."""
    if len(a) != len(b):
        raise DimensionError("Exponent vectors have different lengths", f"{len(b)} != {len(a)}")
    return all(bi <= ai for bi, ai in zip(b, a))


class Ordering(IntEnum):
    """Result of comparing two exponent vectors."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class MonomialOrder(Enum):
    """Monomial orders with variable priority t_1 > ... > t_s."""

    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(order.value for order in cls)
            raise ValidationError(f"Unknown monomial order '{name}'", f"valid orders: {valid}")

    @property
    def sympy_order(self) -> Callable[[Monomial], Any]:
        return _SYMPY_ORDERS[self]

    def key(self, a: Monomial) -> Any:
        return _SYMPY_ORDERS[self](a)

    @property
    def is_graded(self) -> bool:
        return self is not MonomialOrder.LEX

    def __str__(self) -> str:
        return self.value


_SYMPY_ORDERS: Dict[MonomialOrder, SympyOrder] = {
    MonomialOrder.LEX: lex,
    MonomialOrder.GRLEX: grlex,
    MonomialOrder.GREVLEX: grevlex,
}


@lru_cache(maxsize=None)
def _block_order(k: int) -> ProductOrder:
    return ProductOrder(
        (grevlex, itemgetter(slice(0, k))),
        (grevlex, itemgetter(slice(k, None))),
    )


@dataclass(frozen=True)
class EliminationOrder:
    """Block order with the first k variables greater than all others.

    Grevlex is used inside each block.
    """

    k: int = 1

    @property
    def sympy_order(self) -> Callable[[Monomial], Any]:
        return _block_order(self.k)

    def key(self, a: Monomial) -> Any:
        return _block_order(self.k)(a)

    @property
    def is_graded(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"elim({self.k})"


TermOrder = Union[MonomialOrder, EliminationOrder]


def compare(order: TermOrder, a: Monomial, b: Monomial) -> Ordering:
    """
    Compare two exponent vectors under a monomial order.

    Args:
        order: The monomial order
        a: First exponent vector
        b: Second exponent vector

    Returns:
        Ordering: LESS, EQUAL or GREATER

    Raises:
        DimensionError: If the vectors have different lengths
    """
    if len(a) != len(b):
        raise DimensionError("Exponent vectors have different lengths", f"{len(a)} != {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.GREATER if ka > kb else Ordering.LESS


@lru_cache(maxsize=None)
def polynomial_ring(field: PrimeField, nvars: int, order: TermOrder) -> PolyRing:
    """The sympy ring GF(p)[t_1, ..., t_s] with terms ordered by order."""
    return PolyRing(default_names(nvars), GF(field.p), order.sympy_order)


@dataclass(frozen=True)
class Polynomial:
    """An element of F_p[t_1, ..., t_s] stored as a sparse term map.

    The term map never holds zero coefficients; the zero polynomial has
    no terms. Instances are treated as immutable. Their images in sympy
    rings are built on first use and cached per order.
    """

    field: PrimeField
    nvars: int
    terms: Dict[Monomial, int] = dataclass_field(default_factory=dict)

    def __post_init__(self) -> None:
        p = self.field.p
        clean: Dict[Monomial, int] = {}
        for mono, coeff in self.terms.items():
            mono = tuple(mono)
            if len(mono) != self.nvars:
                raise DimensionError(
                    "Exponent vector does not match the number of variables",
                    f"{mono} in {self.nvars} variables",
                )
            if any(e < 0 for e in mono):
                raise ValidationError("Exponents must be non-negative", str(mono))
            value = int(coeff) % p
            if value:
                clean[mono] = value
        object.__setattr__(self, "terms", clean)

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __getstate__(self) -> Dict[str, Any]:
        state = self.__dict__.copy()
        state.pop("_elements", None)
        return state

    # construction

    @classmethod
    def zero(cls, field: PrimeField, nvars: int) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: PrimeField, nvars: int, value: int) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, field: PrimeField, nvars: int) -> "Polynomial":
        return cls.constant(field, nvars, 1)

    @classmethod
    def monomial(
        cls, field: PrimeField, exponents: Sequence[int], coeff: int = 1
    ) -> "Polynomial":
        return cls(field, len(exponents), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, field: PrimeField, nvars: int, index: int) -> "Polynomial":
        """The variable t_{index+1} (0-based index)."""
        if not 0 <= index < nvars:
            raise ValidationError("Variable index out of range", f"{index} for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls.monomial(field, exps)

    @classmethod
    def from_element(cls, field: PrimeField, nvars: int, element: PolyElement) -> "Polynomial":
        return cls(field, nvars, {tuple(m): int(c) for m, c in element.items()})

    # sympy images

    @cached_property
    def _elements(self) -> Dict[TermOrder, PolyElement]:
        return {}

    def element(self, order: TermOrder) -> PolyElement:
        """This polynomial in polynomial_ring(field, nvars, order)."""
        image = self._elements.get(order)
        if image is None:
            image = polynomial_ring(self.field, self.nvars, order).from_dict(self.terms)
            self._elements[order] = image
        return image

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> List[Monomial]:
        return list(self.terms)

    @property
    def total_degree(self) -> int:
        """Largest total degree in the support; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self.terms:
            raise ValidationError("The zero polynomial has no leading monomial")
        return tuple(self.element(order).LM)

    def leading_coefficient(self, order: TermOrder) -> int:
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: TermOrder) -> List[Tuple[Monomial, int]]:
        """Terms in decreasing order."""
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    # arithmetic

    def _check_ring(self, other: "Polynomial") -> None:
        if self.field != other.field or self.nvars != other.nvars:
            raise RingMismatchError(
                "Polynomials belong to different rings",
                f"{self.field}[{self.nvars}] vs {other.field}[{other.nvars}]",
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Polynomial(self.field, self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return multiply(self, other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.field, self.nvars, {m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial, c: int = 1) -> "Polynomial":
        return Polynomial(
            self.field,
            self.nvars,
            {monomial_mul(m, mono): c * v for m, v in self.terms.items()},
        )

    def monic(self, order: TermOrder) -> "Polynomial":
        return self.scale(self.field.inverse(self.leading_coefficient(order)))

    def evaluate(self, point: Sequence[int]) -> int:
        """Value at a point of F_p^s."""
        if len(point) != self.nvars:
            raise DimensionError("Point has the wrong length", f"{len(point)} != {self.nvars}")
        p = self.field.p
        total = 0
        for mono, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, mono):
                if e:
                    value = value * pow(x, e, p) % p
            total += value
        return total % p

    def extend(self, k: int) -> "Polynomial":
        """Embed into a ring with k new variables placed first."""
        pad = (0,) * k
        return Polynomial(self.field, self.nvars + k, {pad + m: v for m, v in self.terms.items()})

    def drop_leading(self, k: int) -> "Polynomial":
        """Inverse of extend; the first k variables must not occur."""
        if any(any(m[:k]) for m in self.terms):
            raise ValidationError("Polynomial involves the variables being dropped")
        return Polynomial(self.field, self.nvars - k, {m[k:]: v for m, v in self.terms.items()})

    # text

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names else default_names(self.nvars)
        parts = []
        for mono, coeff in self.sorted_terms(MonomialOrder.GREVLEX):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, mono) if e
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(coeff)] + factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()


def default_names(nvars: int) -> List[str]:
    return [f"t{i}" for i in range(1, nvars + 1)]


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Exact product of two polynomials over F_p.

    Raises:
        RingMismatchError: If f and g live in different rings
    """
    f._check_ring(g)
    order = MonomialOrder.GREVLEX
    return Polynomial.from_element(f.field, f.nvars, f.element(order) * g.element(order))


def _division_operands(
    f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder
) -> List[PolyElement]:
    for g in divisors:
        f._check_ring(g)
        if g.is_zero:
            raise ValidationError("Cannot divide by the zero polynomial")
    return [g.element(order) for g in divisors]


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder
) -> Tuple[List[Polynomial], Polynomial]:
    """
    Multivariate division of f by an ordered list of divisors.

    At each step the first divisor whose leading monomial divides the
    current leading term is used.

    Args:
        f: The dividend
        divisors: Nonzero divisors in the same ring
        order: The monomial order

    Returns:
        Tuple[List[Polynomial], Polynomial]: quotients a_i and remainder h
        with f = sum(a_i * g_i) + h

    Raises:
        ValidationError: If a divisor is zero
        RingMismatchError: If the ring of a divisor differs from that of f
    """
    elements = _division_operands(f, divisors, order)
    if f.is_zero or not elements:
        return [Polynomial.zero(f.field, f.nvars) for _ in divisors], f
    quotients, rest = f.element(order).div(elements)
    return (
        [Polynomial.from_element(f.field, f.nvars, q) for q in quotients],
        Polynomial.from_element(f.field, f.nvars, rest),
    )


def remainder(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Remainder of f on division by divisors, without tracking quotients."""
    elements = _division_operands(f, divisors, order)
    if f.is_zero or not elements:
        return f
    return Polynomial.from_element(f.field, f.nvars, f.element(order).rem(elements))


# parsing

MAX_EXPONENT = 10_000

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^()]))"
)
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

Token = Tuple[str, str]


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValidationError("Polynomial contains characters outside the grammar", text)
        kind = match.lastgroup or "op"
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _PolynomialParser:
    """Recursive descent over + - * / ^ with exact arithmetic in F_p.

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ("+" | "-") factor | power
    power  := atom (("^" | "**") integer)?
    atom   := integer | variable | "(" expr ")"

    Division is only by nonzero constants.
    """

    def __init__(self, text: str, field: PrimeField, names: Sequence[str]):
        self.text = text
        self.field = field
        self.variables = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def _next(self) -> Token:
        if self.pos >= len(self.tokens):
            raise ValidationError(f"Cannot parse polynomial '{self.text}'", "unexpected end")
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> Polynomial:
        result = self._expr()
        if self.pos != len(self.tokens):
            raise ValidationError(
                f"Cannot parse polynomial '{self.text}'", f"unexpected '{self._peek()}'"
            )
        return result

    def _expr(self) -> Polynomial:
        result = self._term()
        while self._peek() in ("+", "-"):
            op = self._next()[1]
            right = self._term()
            result = result + right if op == "+" else result - right
        return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while self._peek() in ("*", "/"):
            op = self._next()[1]
            right = self._factor()
            result = result * right if op == "*" else self._divide(result, right)
        return result

    def _divide(self, left: Polynomial, right: Polynomial) -> Polynomial:
        if any(any(m) for m in right.terms):
            raise ValidationError(f"'{self.text}' is not a polynomial", "division by a variable")
        value = right.terms.get((0,) * self.nvars, 0)
        if value == 0:
            raise ValidationError(f"Division by zero is undefined in {self.field}", self.text)
        return left.scale(self.field.inverse(value))

    def _factor(self) -> Polynomial:
        if self._peek() in ("+", "-"):
            op = self._next()[1]
            operand = self._factor()
            return operand if op == "+" else -operand
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if self._peek() not in ("^", "**"):
            return base
        self._next()
        kind, value = self._next()
        if kind != "int":
            raise ValidationError(
                f"Cannot parse polynomial '{self.text}'", "exponents must be integers"
            )
        exponent = int(value)
        if exponent > MAX_EXPONENT:
            raise ValidationError(f"Exponent in '{self.text}' exceeds {MAX_EXPONENT}", value)
        result = Polynomial.one(self.field, self.nvars)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def _atom(self) -> Polynomial:
        kind, value = self._next()
        if kind == "int":
            return Polynomial.constant(self.field, self.nvars, int(value))
        if kind == "name":
            return Polynomial.variable(self.field, self.nvars, self.variables[value])
        if value == "(":
            inner = self._expr()
            if self._next()[1] != ")":
                raise ValidationError(f"Cannot parse polynomial '{self.text}'", "expected ')'")
            return inner
        raise ValidationError(f"Cannot parse polynomial '{self.text}'", f"unexpected '{value}'")


def parse_polynomial(text: str, field: PrimeField, names: Sequence[str]) -> Polynomial:
    """
    Parse a polynomial such as ``t1*t2^2 - t1^2*t2`` over F_p.

    The text is tokenized against the polynomial grammar and evaluated
    directly in F_p; nothing in it is ever executed.

    Args:
        text: Polynomial text
        field: Coefficient field
        names: Ordered variable names

    Returns:
        Polynomial: The parsed polynomial with canonical coefficients

    Raises:
        ValidationError: If the text is not a polynomial in the given variables
    """
    if not isinstance(text, str) or not text.strip():
        raise ValidationError("Polynomial text cannot be empty")
    unknown = set(_IDENTIFIER.findall(text)) - set(names)
    if unknown:
        raise ValidationError(f"Unknown variables in '{text}'", ", ".join(sorted(unknown)))
    return _PolynomialParser(text, field, names).parse()
