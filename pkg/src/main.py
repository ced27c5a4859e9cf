#!/usr/bin/env python3
"""
Command-line entry point for the footprint toolkit.

Reads a JSON problem specification, dispatches one command and prints a
human-readable report or, with --json, a stable-keyed JSON document.
Run it as ``python -m src.main <command> --input spec.json``.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from src.ci_formulas import ci_degree, ci_fp_formula, ci_regularity
from src.exceptions import (
    BudgetExceededError,
    FootprintError,
    InconclusiveError,
    UnmixednessUnknownError,
    ValidationError,
)
from src.field import PrimeField
from src.graphs import (
    cm_witness_monomial,
    edge_ideal,
    find_hh_labeling,
    induced_matching_number,
    is_unmixed_graph,
    minimal_vertex_covers,
)
from src.groebner import initial_ideal, quotient_hilbert_data
from src.invariants import (
    COLUMNS,
    EnumerationBudget,
    Unmixedness,
    certify_unmixedness,
    conjecture_report,
    delta,
    delta_unmixed_via_colon,
    fp,
    regularity_index_hilbert,
    table,
    vasconcelos,
)
from src.monomial_ideal import ci_profile, hilbert_function
from src.points import (
    code_dimension,
    code_length,
    evaluation_code_minimum_distance,
    projective_points,
    vanishing_ideal,
)
from src.polynomial import MonomialOrder, default_names
from src.utils import (
    EnvironmentHelper,
    format_monomial,
    format_monomials,
    format_table,
    setup_logging,
    to_json,
)
from src.validators import ProblemSpec, parse_spec

COMMANDS = (
    "gb",
    "initial",
    "hilbert",
    "fp",
    "delta",
    "vasconcelos",
    "table",
    "ci",
    "edge-ideal",
    "witness",
    "r0",
    "points",
)

EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INCONCLUSIVE = 4

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="footprint",
        description="Minimum distance, footprint and Vasconcelos functions of graded ideals",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="JSON problem specification")
    parser.add_argument(
        "--order", choices=[o.value for o in MonomialOrder], help="overrides the order of --input"
    )
    parser.add_argument("-d", type=int, dest="d", help="degree")
    parser.add_argument("--max-d", type=int, default=3, help="last degree of a table")
    parser.add_argument("--budget", type=int, help="largest number of enumerated candidates")
    parser.add_argument("--no-prune", action="store_true", help="evaluate every candidate")
    parser.add_argument(
        "--assert-unmixed", action="store_true", help="treat the ideal as unmixed"
    )
    parser.add_argument("--json", action="store_true", help="print JSON")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--workers", type=int, default=1, help="worker processes")
    parser.add_argument("--degrees", help="comma-separated generator degrees for ci")
    parser.add_argument("--cap", type=int, default=10, help="last degree scanned by r0")
    parser.add_argument("--field", type=int, help="prime p for points without --input")
    parser.add_argument("--nvars", type=int, help="coordinates for points without --input")
    return parser


def load_spec(path: Optional[str]) -> Optional[ProblemSpec]:
    """
    Read and validate the problem specification file.

    Raises:
        ValidationError: If the file cannot be read or is invalid
    """
    if not path:
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ValidationError(f"Cannot read specification file '{path}'", str(e))
    return parse_spec(text)


def make_budget(args: argparse.Namespace) -> EnumerationBudget:
    kwargs: Dict[str, Any] = {
        "prune_regular_leading": not args.no_prune,
        "workers": args.workers,
    }
    if args.budget is not None:
        kwargs["max_candidates"] = args.budget
    return EnumerationBudget(**kwargs)


def _require_spec(spec: Optional[ProblemSpec], command: str) -> ProblemSpec:
    if spec is None:
        raise ValidationError(f"Command '{command}' needs --input")
    return spec


def _require_degree(args: argparse.Namespace, command: str) -> int:
    if args.d is None:
        raise ValidationError(f"Command '{command}' needs -d")
    return args.d


def _order(spec: ProblemSpec, args: argparse.Namespace) -> MonomialOrder:
    return MonomialOrder.from_name(args.order) if args.order else spec.monomial_order


def _hypotheses_asserted(spec: ProblemSpec, args: argparse.Namespace) -> bool:
    """Unmixed radical with linear primes, asserted or true by construction."""
    if spec.primes_equidimensional:
        return True
    flags = spec.asserted_unmixed or args.assert_unmixed
    return flags and spec.asserted_radical and spec.asserted_linear_primes


def _unmixedness(spec: ProblemSpec, args: argparse.Namespace) -> Unmixedness:
    asserted = args.assert_unmixed or spec.asserted_unmixed or spec.primes_equidimensional
    return certify_unmixedness(spec.ideal, _order(spec, args), asserted)


def _run_gb(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    basis = spec.ideal.groebner_basis(_order(spec, args))
    return {"groebner_basis": [g.format(spec.variables) for g in basis]}


def _run_initial(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    M = initial_ideal(spec.ideal, _order(spec, args))
    return {
        "initial_ideal": [format_monomial(a, spec.variables) for a in M.gens],
        "exponents": [list(a) for a in M.gens],
    }


def _run_hilbert(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    order = _order(spec, args)
    data = quotient_hilbert_data(spec.ideal, order)
    result: Dict[str, Any] = {
        "numerator": list(data.numerator),
        "dimension": data.dimension,
        "degree": data.degree,
        "a_invariant": data.a_invariant,
        "regularity_index": regularity_index_hilbert(initial_ideal(spec.ideal, order)),
    }
    if args.d is not None:
        result["hilbert_function"] = hilbert_function(initial_ideal(spec.ideal, order), args.d)
    return result


def _run_fp(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    d = _require_degree(args, "fp")
    return {"d": d, "fp": fp(spec.ideal, _order(spec, args), d)}


def _run_delta(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    d = _require_degree(args, "delta")
    order = _order(spec, args)
    budget = make_budget(args)
    result: Dict[str, Any] = {"d": d, "delta": delta(spec.ideal, order, d, budget)}
    unmixedness = _unmixedness(spec, args)
    result["unmixedness"] = unmixedness.value
    if unmixedness.known and _has_standard_monomials(spec, order, d):
        result["delta_via_colon"] = delta_unmixed_via_colon(
            spec.ideal, order, d, budget, unmixedness
        )
    return result


def _has_standard_monomials(spec: ProblemSpec, order: MonomialOrder, d: int) -> bool:
    return hilbert_function(initial_ideal(spec.ideal, order), d) > 0


def _run_vasconcelos(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    d = _require_degree(args, "vasconcelos")
    value = vasconcelos(spec.ideal, _order(spec, args), d, make_budget(args))
    return {"d": d, "vasconcelos": value}


def _run_table(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    result = table(
        spec.ideal, _order(spec, args), args.max_d, make_budget(args), frozenset(COLUMNS)
    )
    return {"table": result.to_dict(), "_text": format_table(result)}


def _run_ci(spec: Optional[ProblemSpec], args: argparse.Namespace) -> Dict[str, Any]:
    if args.degrees:
        try:
            degrees = sorted(EnvironmentHelper.parse_int_list(args.degrees))
        except ValueError as e:
            raise ValidationError(str(e), "--degrees")
    else:
        spec = _require_spec(spec, "ci")
        profile = ci_profile(initial_ideal(spec.ideal, _order(spec, args)))
        if not profile.is_ci:
            raise ValidationError("The initial ideal is not a complete intersection")
        degrees = list(profile.degrees)
    result: Dict[str, Any] = {
        "degrees": degrees,
        "degree": ci_degree(degrees),
        "regularity": ci_regularity(degrees),
    }
    if args.d is not None:
        result["d"] = args.d
        result["fp"] = ci_fp_formula(degrees, args.d)
    return result


def _require_graph(spec: Optional[ProblemSpec], command: str) -> ProblemSpec:
    spec = _require_spec(spec, command)
    if spec.graph is None:
        raise ValidationError(f"Command '{command}' needs a graph specification", "$.graph")
    return spec


def _run_edge_ideal(spec: Optional[ProblemSpec], args: argparse.Namespace) -> Dict[str, Any]:
    spec = _require_graph(spec, "edge-ideal")
    G = spec.graph
    assert G is not None
    try:
        labeling = find_hh_labeling(G)
    except ValidationError as e:
        logger.info(f"No labeling search: {e}")
        labeling = None
    return {
        "edge_ideal": format_monomials(edge_ideal(G).gens, spec.variables),
        "minimal_vertex_covers": [sorted(c) for c in minimal_vertex_covers(G)],
        "unmixed": is_unmixed_graph(G),
        "induced_matching_number": induced_matching_number(G),
        "isolated_vertices": G.isolated_vertices,
        "hh_labeling": labeling.to_dict() if labeling else None,
    }


def _run_witness(spec: Optional[ProblemSpec], args: argparse.Namespace) -> Dict[str, Any]:
    spec = _require_graph(spec, "witness")
    G = spec.graph
    assert G is not None
    labeling = find_hh_labeling(G)
    if labeling is None:
        raise InconclusiveError("Graph has no Herzog-Hibi labeling")
    a = cm_witness_monomial(G, labeling)
    degree = sum(a)
    matching = induced_matching_number(G)
    result: Dict[str, Any] = {
        "hh_labeling": labeling.to_dict(),
        "witness": format_monomial(a, spec.variables),
        "witness_degree": degree,
        "induced_matching_number": matching,
    }
    order, budget = _order(spec, args), make_budget(args)
    result["delta_at_witness_degree"] = delta(spec.ideal, order, degree, budget)
    if matching == degree:
        result["delta_at_induced_matching_number"] = result["delta_at_witness_degree"]
    elif matching >= 1:
        result["delta_at_induced_matching_number"] = delta(spec.ideal, order, matching, budget)
    else:
        result["delta_at_induced_matching_number"] = None
    return result


def _run_r0(spec: ProblemSpec, args: argparse.Namespace) -> Dict[str, Any]:
    report = conjecture_report(
        spec.ideal,
        _order(spec, args),
        make_budget(args),
        cap=args.cap,
        asserted=_hypotheses_asserted(spec, args),
    )
    return {
        "r0": report.r0,
        "regularity_index": report.regularity_index,
        "dimension": report.dimension,
        "r0_at_most_regularity": report.holds,
    }


def _run_points(spec: Optional[ProblemSpec], args: argparse.Namespace) -> Dict[str, Any]:
    if spec is not None:
        field, nvars = spec.field, spec.nvars
        names = list(spec.variables)
    else:
        if args.field is None or args.nvars is None:
            raise ValidationError("Command 'points' needs --input or both --field and --nvars")
        field, nvars = PrimeField(args.field), args.nvars
        names = default_names(nvars)
    order = MonomialOrder.from_name(args.order) if args.order else MonomialOrder.GREVLEX
    points = projective_points(field, nvars)
    ideal = vanishing_ideal(field, points)
    result: Dict[str, Any] = {
        "points": [list(pt) for pt in points],
        "length": code_length(points),
        "vanishing_ideal": [g.format(names) for g in ideal.groebner_basis(order)],
    }
    if args.d is not None:
        result["d"] = args.d
        result["dimension"] = code_dimension(field, points, args.d)
        result["minimum_distance"] = evaluation_code_minimum_distance(
            field, points, args.d, make_budget(args)
        )
    return result


def run(command: str, spec: Optional[ProblemSpec], args: argparse.Namespace) -> Dict[str, Any]:
    """
    Execute one command.

    Returns:
        Dict[str, Any]: Report with the command, provenance and result

    Raises:
        ValidationError: If the command is unknown or its inputs are missing
    """
    spec_free = {
        "ci": _run_ci,
        "edge-ideal": _run_edge_ideal,
        "witness": _run_witness,
        "points": _run_points,
    }
    needs_spec = {
        "gb": _run_gb,
        "initial": _run_initial,
        "hilbert": _run_hilbert,
        "fp": _run_fp,
        "delta": _run_delta,
        "vasconcelos": _run_vasconcelos,
        "table": _run_table,
        "r0": _run_r0,
    }
    if command in spec_free:
        result = spec_free[command](spec, args)
    elif command in needs_spec:
        result = needs_spec[command](_require_spec(spec, command), args)
    else:
        raise ValidationError(f"Unknown command '{command}'")

    budget = make_budget(args)
    provenance: Dict[str, Any] = {
        "budget": budget.max_candidates,
        "prune_regular_leading": budget.prune_regular_leading,
    }
    if spec is not None:
        provenance["order"] = args.order or spec.order
        provenance["field"] = spec.p
        provenance["source"] = spec.source
    return {"command": command, "provenance": provenance, "result": result}


def render_report(report: Dict[str, Any], as_json: bool) -> str:
    result = dict(report["result"])
    text = result.pop("_text", None)
    if as_json:
        return to_json({**report, "result": result})
    if text is not None:
        return text
    return "\n".join(f"{key}: {value}" for key, value in result.items())


def main(argv: Optional[List[str]] = None) -> None:
    """Main execution function."""
    args = build_parser().parse_args(argv)
    setup_logging(EnvironmentHelper.log_level(args.log_level))

    logger.info(f"=== footprint {args.command} started ===")

    try:
        spec = load_spec(args.input)
        report = run(args.command, spec, args)
        print(render_report(report, args.json))
        logger.info(f"=== footprint {args.command} finished ===")

    except BudgetExceededError as e:
        logger.error(f"Enumeration budget exceeded: {e}")
        logger.error("Raise --budget or choose a smaller degree.")
        sys.exit(EXIT_BUDGET)

    except (InconclusiveError, UnmixednessUnknownError) as e:
        logger.error(f"No conclusive answer: {e}")
        sys.exit(EXIT_INCONCLUSIVE)

    except ValidationError as e:
        logger.error(f"Input validation failed: {e}")
        logger.error("Please check your specification and flags and try again.")
        sys.exit(EXIT_INPUT)

    except FootprintError as e:
        logger.error(f"Computation failed: {e}")
        if e.details:
            logger.error(f"Details: {e.details}")
        sys.exit(EXIT_INTERNAL)

    except Exception as e:
        logger.error(f"Unexpected error occurred: {str(e)}")
        logger.debug("Exception details:", exc_info=True)
        sys.exit(EXIT_INTERNAL)


if __name__ == "__main__":
    main()
