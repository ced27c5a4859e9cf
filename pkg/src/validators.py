"""
Input validation module for problem specifications.

A problem specification is a JSON document naming a prime field, the
variables, a monomial order and exactly one of: polynomial generators,
a list of primes given by linear forms, or a graph. Every rejection
carries the JSON path of the offending field.
"""

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.exceptions import ValidationError
from src.field import PrimeField
from src.graphs import Graph, edge_ideal_polynomials
from src.groebner import Ideal, intersect_all
from src.polynomial import MonomialOrder, Polynomial, default_names, parse_polynomial

SOURCES = ("generators", "primes", "graph")
ASSERTION_FLAGS = ("unmixed", "radical", "linear_primes")


@dataclass(frozen=True)
class ProblemSpec:
    """A validated problem specification.

    Polynomials are kept as their input text so that rendering it
    gives back an equal problem.
    """

    p: int
    variables: Tuple[str, ...]
    order: str = "grevlex"
    generators: Optional[Tuple[str, ...]] = None
    primes: Optional[Tuple[Tuple[str, ...], ...]] = None
    graph: Optional[Graph] = None
    asserted_unmixed: bool = False
    asserted_radical: bool = False
    asserted_linear_primes: bool = False

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def monomial_order(self) -> MonomialOrder:
        return MonomialOrder.from_name(self.order)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def source(self) -> str:
        if self.generators is not None:
            return "generators"
        if self.primes is not None:
            return "primes"
        return "graph"

    def prime_forms(self) -> List[List[Polynomial]]:
        if self.primes is None:
            raise ValidationError("Specification does not list primes")
        return [
            [parse_polynomial(text, self.field, self.variables) for text in forms]
            for forms in self.primes
        ]

    @property
    def primes_equidimensional(self) -> bool:
        """True if every listed prime has the same number of linear forms."""
        return self.primes is not None and len({len(forms) for forms in self.primes}) == 1

    @cached_property
    def ideal(self) -> Ideal:
        """The ideal described by the specification; primes are intersected."""
        if self.generators is not None:
            gens = [parse_polynomial(text, self.field, self.variables) for text in self.generators]
            return Ideal(self.field, self.nvars, gens)
        if self.primes is not None:
            return intersect_all([Ideal.from_generators(forms) for forms in self.prime_forms()])
        assert self.graph is not None
        return edge_ideal_polynomials(self.graph, self.field)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "field": self.p,
            "variables": list(self.variables),
            "order": self.order,
        }
        if self.generators is not None:
            data["generators"] = list(self.generators)
        if self.primes is not None:
            data["primes"] = [list(forms) for forms in self.primes]
        if self.graph is not None:
            data["graph"] = self.graph.to_dict()
        data["asserted"] = {
            "unmixed": self.asserted_unmixed,
            "radical": self.asserted_radical,
            "linear_primes": self.asserted_linear_primes,
        }
        return data


class SpecValidator:
    """Validates every field of a problem specification."""

    VARIABLE_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
    POLYNOMIAL_PATTERN = re.compile(r"^[A-Za-z0-9_\s+\-*^()/]+$")
    MAX_POLYNOMIAL_LENGTH = 10000
    MAX_VARIABLES = 64

    def validate_field(self, value: Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError("Field characteristic must be an integer", "$.field")
        try:
            PrimeField(value)
        except ValidationError as e:
            raise ValidationError(e.message, f"$.field = {value}")
        return value

    def validate_variables(self, value: Any, expected: Optional[int] = None) -> Tuple[str, ...]:
        """
        Validate the variable names.

        Raises:
            ValidationError: If names are missing, malformed or repeated
        """
        if value is None and expected is not None:
            return tuple(default_names(expected))
        if not isinstance(value, list) or not value:
            raise ValidationError("Variables must be a nonempty list of names", "$.variables")
        if len(value) > self.MAX_VARIABLES:
            raise ValidationError(
                f"At most {self.MAX_VARIABLES} variables are supported", "$.variables"
            )
        seen = set()
        for i, name in enumerate(value):
            if not isinstance(name, str) or not self.VARIABLE_PATTERN.match(name):
                raise ValidationError("Invalid variable name", f"$.variables[{i}] = {name!r}")
            if name in seen:
                raise ValidationError("Duplicate variable name", f"$.variables[{i}] = {name!r}")
            seen.add(name)
        if expected is not None and len(value) != expected:
            raise ValidationError(
                "Variable count must match the graph's vertex count",
                f"$.variables has {len(value)}, graph has {expected}",
            )
        return tuple(value)

    def validate_order(self, value: Any) -> str:
        if value is None:
            return "grevlex"
        if not isinstance(value, str):
            raise ValidationError("Order must be a string", "$.order")
        try:
            return MonomialOrder.from_name(value).value
        except ValidationError:
            raise ValidationError(
                "Order must be one of lex, grlex, grevlex", f"$.order = {value!r}"
            )

    def validate_polynomial_text(
        self, text: Any, path: str, field: PrimeField, names: Sequence[str]
    ) -> str:
        """
        Check a polynomial string against the grammar and parse it once.

        Raises:
            ValidationError: If the text is empty, too long, uses characters
            outside the grammar or does not parse
        """
        if not isinstance(text, str) or not text.strip():
            raise ValidationError("Polynomial must be a nonempty string", path)
        text = text.strip()
        if len(text) > self.MAX_POLYNOMIAL_LENGTH:
            raise ValidationError("Polynomial text is too long", path)
        if not self.POLYNOMIAL_PATTERN.match(text) or "__" in text:
            raise ValidationError("Polynomial contains characters outside the grammar", path)
        try:
            parse_polynomial(text, field, names)
        except ValidationError as e:
            raise ValidationError(e.message, f"{path}: {e.details}" if e.details else path)
        return text

    def validate_generators(
        self, value: Any, field: PrimeField, names: Sequence[str]
    ) -> Tuple[str, ...]:
        if not isinstance(value, list) or not value:
            raise ValidationError("Generators must be a nonempty list", "$.generators")
        generators = []
        for i, text in enumerate(value):
            path = f"$.generators[{i}]"
            text = self.validate_polynomial_text(text, path, field, names)
            if parse_polynomial(text, field, names).is_zero:
                raise ValidationError(f"Generator '{text}' is zero in {field}", path)
            generators.append(text)
        return tuple(generators)

    def validate_primes(
        self, value: Any, field: PrimeField, names: Sequence[str]
    ) -> Tuple[Tuple[str, ...], ...]:
        if not isinstance(value, list) or not value:
            raise ValidationError("Primes must be a nonempty list", "$.primes")
        primes = []
        for i, forms in enumerate(value):
            if not isinstance(forms, list) or not forms:
                raise ValidationError("Each prime needs a nonempty list of forms", f"$.primes[{i}]")
            validated = tuple(
                self.validate_polynomial_text(text, f"$.primes[{i}][{j}]", field, names)
                for j, text in enumerate(forms)
            )
            for j, text in enumerate(validated):
                form = parse_polynomial(text, field, names)
                if not form.is_homogeneous or form.total_degree != 1:
                    raise ValidationError(
                        "Prime generators must be linear forms", f"$.primes[{i}][{j}]"
                    )
            primes.append(validated)
        return tuple(primes)

    def validate_graph(self, value: Any) -> Graph:
        if not isinstance(value, dict):
            raise ValidationError("Graph must be an object", "$.graph")
        n = value.get("vertices")
        edges = value.get("edges")
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValidationError("Graph vertex count must be an integer", "$.graph.vertices")
        if not isinstance(edges, list):
            raise ValidationError("Graph edges must be a list", "$.graph.edges")
        for i, edge in enumerate(edges):
            if (
                not isinstance(edge, list)
                or len(edge) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in edge)
            ):
                raise ValidationError(
                    "Edge must be a pair of vertex numbers", f"$.graph.edges[{i}]"
                )
        try:
            return Graph.from_edges(n, edges)
        except ValidationError as e:
            raise ValidationError(e.message, f"$.graph: {e.details}" if e.details else "$.graph")

    def validate_asserted(self, value: Any) -> Dict[str, bool]:
        if value is None:
            return {flag: False for flag in ASSERTION_FLAGS}
        if not isinstance(value, dict):
            raise ValidationError("Assertions must be an object", "$.asserted")
        unknown = set(value) - set(ASSERTION_FLAGS)
        if unknown:
            raise ValidationError("Unknown assertion flags", f"$.asserted: {sorted(unknown)}")
        flags = {}
        for flag in ASSERTION_FLAGS:
            flag_value = value.get(flag, False)
            if not isinstance(flag_value, bool):
                raise ValidationError("Assertion flags must be booleans", f"$.asserted.{flag}")
            flags[flag] = flag_value
        return flags

    def validate(self, data: Any) -> ProblemSpec:
        if not isinstance(data, dict):
            raise ValidationError("Specification must be a JSON object", "$")
        known = {"field", "variables", "order", "asserted"} | set(SOURCES)
        unknown = set(data) - known
        if unknown:
            raise ValidationError("Unknown specification keys", f"$: {sorted(unknown)}")
        present = [key for key in SOURCES if key in data]
        if len(present) != 1:
            raise ValidationError(
                "Exactly one of generators, primes or graph is required",
                f"$: found {present or 'none'}",
            )

        p = self.validate_field(data.get("field"))
        field = PrimeField(p)
        order = self.validate_order(data.get("order"))
        flags = self.validate_asserted(data.get("asserted"))

        generators = primes = graph = None
        if present[0] == "graph":
            graph = self.validate_graph(data["graph"])
            variables = self.validate_variables(data.get("variables"), expected=graph.n)
        else:
            variables = self.validate_variables(data.get("variables"))
            if present[0] == "generators":
                generators = self.validate_generators(data["generators"], field, variables)
            else:
                primes = self.validate_primes(data["primes"], field, variables)

        return ProblemSpec(
            p=p,
            variables=variables,
            order=order,
            generators=generators,
            primes=primes,
            graph=graph,
            asserted_unmixed=flags["unmixed"],
            asserted_radical=flags["radical"],
            asserted_linear_primes=flags["linear_primes"],
        )


def parse_spec(text: str) -> ProblemSpec:
    """
    Parse and validate a JSON problem specification.

    Raises:
        ValidationError: If the JSON is malformed or violates the schema
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError("Specification is not valid JSON", f"line {e.lineno}: {e.msg}")
    return SpecValidator().validate(data)


def render_spec(spec: ProblemSpec) -> str:
    """Render a specification as JSON accepted by parse_spec."""
    return json.dumps(spec.to_dict(), indent=2, sort_keys=True)
