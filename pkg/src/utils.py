"""
Utility functions for the footprint toolkit.

This module provides logging setup, environment variable handling and
rendering of results as tables or JSON.
"""

import json
import logging
import os
from typing import Any, Iterable, List, Optional, Sequence

from src.invariants import FunctionTable

LOG_LEVEL_ENV = "FOOTPRINT_LOG_LEVEL"


class EnvironmentHelper:
    """Helper class for environment variable operations."""

    @staticmethod
    def get_optional_env(name: str, default: str = "") -> str:
        """
        Get optional environment variable.

        Args:
            name: Environment variable name
            default: Default value if not set

        Returns:
            str: Environment variable value or default
        """
        return os.getenv(name, default)

    @staticmethod
    def parse_comma_separated(value: Optional[str]) -> List[str]:
        """
        Parse comma-separated string into list.

        Args:
            value: Comma-separated string

        Returns:
            List[str]: List of trimmed values
        """
        if not value or not value.strip():
            return []
        return [item.strip() for item in value.split(",") if item.strip()]

    @staticmethod
    def parse_int_list(value: Optional[str]) -> List[int]:
        """
        Parse a comma-separated list of integers such as ``2,3``.

        Raises:
            ValueError: If an item is not an integer
        """
        items = EnvironmentHelper.parse_comma_separated(value)
        try:
            return [int(item) for item in items]
        except ValueError:
            raise ValueError(f"Expected comma-separated integers, got '{value}'")

    @staticmethod
    def log_level(override: Optional[str] = None) -> str:
        """The log level from the command line, else the environment, else INFO."""
        if override:
            return override
        return EnvironmentHelper.get_optional_env(LOG_LEVEL_ENV, "INFO")


def setup_logging(level: str = "INFO") -> None:
    """
    Configure logging for the toolkit.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
    """
    log_level = getattr(logging, level.upper(), logging.INFO)

    formatter = logging.Formatter(
        fmt="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    # stderr, so that --json output on stdout stays clean
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)


def format_monomial(a: Sequence[int], names: Sequence[str]) -> str:
    factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, a) if e]
    return "*".join(factors) if factors else "1"


def format_monomials(monomials: Iterable[Sequence[int]], names: Sequence[str]) -> str:
    return "(" + ", ".join(format_monomial(a, names) for a in monomials) + ")"


def _cell(value: Optional[int], column: str, exceeded: Sequence[str]) -> str:
    if column in exceeded:
        return "budget"
    return "-" if value is None else str(value)


def format_table(table: FunctionTable) -> str:
    """
    Render a function table with columns d | H | delta | fp | vasconcelos.

    Cells skipped for budget reasons show ``budget``; columns that were
    not requested show ``-``.
    """
    header = ["d", "H", "delta", "fp", "vasconcelos"]
    body = []
    for row in table.rows:
        body.append(
            [
                str(row.d),
                str(row.hilbert),
                _cell(row.delta, "delta", row.budget_exceeded),
                _cell(row.fp, "fp", row.budget_exceeded),
                _cell(row.vasconcelos, "vasconcelos", row.budget_exceeded),
            ]
        )
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = [
        f"deg(S/I) = {table.degree}, dim(S/I) = {table.dimension}, "
        f"order = {table.order}, field = {table.field}",
        " | ".join(h.rjust(w) for h, w in zip(header, widths)),
        "-+-".join("-" * w for w in widths),
    ]
    for r in body:
        lines.append(" | ".join(c.rjust(w) for c, w in zip(r, widths)))
    return "\n".join(lines)


def to_json(data: Any) -> str:
    """Stable-keyed JSON rendering."""
    return json.dumps(data, indent=2, sort_keys=True, default=_json_default)


def _json_default(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")
