"""
Minimum distance, footprint and Vasconcelos functions of graded ideals.

delta and vasconcelos enumerate the nonzero standard polynomials of
degree d (the normal forms of S_d modulo I) and read regularity and
colon degrees off the Hilbert series of S/I and S/(I, f); fp works on
the initial ideal alone. Candidate evaluation can be spread over worker processes.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from functools import partial
from itertools import product
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from src.exceptions import (
    BudgetExceededError,
    InconclusiveError,
    InternalConsistencyError,
    NotGradedError,
    SizeGuardError,
    UnmixednessUnknownError,
    ValidationError,
)
from src.groebner import (
    Ideal,
    colon,
    extended_initial_ideal,
    graded_order,
    ideal_sum,
    initial_ideal,
    membership,
    quotient_degree,
)
from src.monomial_ideal import (
    HilbertData,
    MonomialIdeal,
    add_monomial,
    ci_profile,
    colon_by_monomial,
    colon_hilbert_data,
    hilbert_data,
    hilbert_function,
    is_regular_extension,
    is_unmixed_squarefree,
    standard_monomials,
    zero_divisor_standard_monomials,
)
from src.polynomial import Monomial, MonomialOrder, Polynomial

logger = logging.getLogger(__name__)

DEFAULT_MAX_CANDIDATES = 2**24
COLUMNS = ("delta", "fp", "vasconcelos")


class Unmixedness(Enum):
    CERTIFIED = "certified"
    ASSERTED = "asserted"
    UNKNOWN = "unknown"

    @property
    def known(self) -> bool:
        return self is not Unmixedness.UNKNOWN


@dataclass(frozen=True)
class EnumerationBudget:
    """Limits for candidate enumeration.

    Attributes:
        max_candidates: Largest accepted q^n - 1
        prune_regular_leading: Skip candidates whose leading monomial is
            regular on S/in(I)
        workers: Worker processes for candidate evaluation
    """

    max_candidates: int = DEFAULT_MAX_CANDIDATES
    prune_regular_leading: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        if self.max_candidates < 1:
            raise ValidationError("Candidate budget must be positive", str(self.max_candidates))
        if self.workers < 1:
            raise ValidationError("Worker count must be positive", str(self.workers))

    def check(self, n: int, q: int) -> None:
        if q**n - 1 > self.max_candidates:
            raise BudgetExceededError(n, q, self.max_candidates)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class TableRow:
    d: int
    hilbert: int
    delta: Optional[int] = None
    fp: Optional[int] = None
    vasconcelos: Optional[int] = None
    budget_exceeded: Tuple[str, ...] = ()


@dataclass(frozen=True)
class FunctionTable:
    """Rows (d, H(d), delta, fp, vasconcelos) with header data of S/I."""

    degree: int
    dimension: int
    order: str
    field: str
    rows: Tuple[TableRow, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "order": self.order,
            "field": self.field,
            "rows": [asdict(row) for row in self.rows],
        }


@dataclass(frozen=True)
class ConjectureReport:
    """r_0 next to the regularity index of S/in(I)."""

    r0: int
    regularity_index: int
    dimension: int
    holds: Optional[bool]


def _require_degree(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise ValidationError("Degree must be an integer >= 1", repr(d))


def _prepare(I: Ideal, order: MonomialOrder) -> MonomialIdeal:
    I.require_graded()
    graded_order(order)
    M = initial_ideal(I, order)
    M.require_proper()
    return M


def _standard_candidates(
    I: Ideal, standard: Sequence[Monomial]
) -> Iterator[Polynomial]:
    """Nonzero combinations of the standard monomials with first nonzero coefficient 1.

    Scalar multiples give the same (I, f) and (I : f), so one
    representative per line is enough.
    """
    q = I.field.p
    for coeffs in product(range(q), repeat=len(standard)):
        lead = next((c for c in coeffs if c), 0)
        if lead != 1:
            continue
        terms = {mono: c for mono, c in zip(standard, coeffs) if c}
        yield Polynomial(I.field, I.nvars, terms)


def _is_regular_leading(M: MonomialIdeal, f: Polynomial, order: MonomialOrder) -> bool:
    return colon_by_monomial(M, f.leading_monomial(order)) == M


def _extension_data(I: Ideal, order: MonomialOrder, f: Polynomial) -> HilbertData:
    """Hilbert data of S/(I, f) from a basis grown out of the basis of I."""
    return hilbert_data(extended_initial_ideal(I.groebner_basis(order), f))


def _drop_degree(
    I: Ideal,
    order: MonomialOrder,
    M: MonomialIdeal,
    base: HilbertData,
    prune: bool,
    f: Polynomial,
) -> Optional[int]:
    """deg(S/(I, f)) when f is a zero-divisor, otherwise None."""
    if prune and _is_regular_leading(M, f, order):
        return None
    extended = _extension_data(I, order, f)
    if is_regular_extension(base, extended, f.total_degree):
        return None
    return extended.degree


def _colon_degree(
    I: Ideal,
    order: MonomialOrder,
    M: MonomialIdeal,
    base: HilbertData,
    prune: bool,
    f: Polynomial,
) -> int:
    """deg(S/(I : f)), read off the Hilbert series of S/I and S/(I, f)."""
    if prune and _is_regular_leading(M, f, order):
        return base.degree
    return colon_hilbert_data(base, _extension_data(I, order, f), f.total_degree).degree


def _evaluate(
    worker: Callable[[Polynomial], Any], candidates: Iterable[Polynomial], workers: int
) -> List[Any]:
    if workers <= 1:
        return [worker(f) for f in candidates]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, candidates, chunksize=32))


def delta(
    I: Ideal, order: MonomialOrder, d: int, budget: Optional[EnumerationBudget] = None
) -> int:
    """
    Minimum distance function delta_I(d).

    delta_I(d) = deg(S/I) - max deg(S/(I, f)) over degree-d standard
    polynomials f with (I : f) != I, or deg(S/I) when there is none.

    Raises:
        BudgetExceededError: If q^n - 1 exceeds the candidate budget
        NotGradedError: If I is not graded
    """
    budget = budget or EnumerationBudget()
    _require_degree(d)
    M = _prepare(I, order)
    base = hilbert_data(M)
    standard = standard_monomials(M, d)
    budget.check(len(standard), I.field.p)

    worker = partial(_drop_degree, I, order, M, base, budget.prune_regular_leading)
    values = _evaluate(worker, _standard_candidates(I, standard), budget.workers)
    drops = [v for v in values if v is not None]
    logger.debug(f"delta({d}): {len(standard)} standard monomials, {len(drops)} zero-divisors")
    if not drops:
        return base.degree
    return base.degree - max(drops)


def vasconcelos(
    I: Ideal, order: MonomialOrder, d: int, budget: Optional[EnumerationBudget] = None
) -> int:
    """Vasconcelos function: min deg(S/(I : f)) over f in S_d not in I."""
    budget = budget or EnumerationBudget()
    _require_degree(d)
    M = _prepare(I, order)
    base = hilbert_data(M)
    standard = standard_monomials(M, d)
    if not standard:
        return base.degree
    budget.check(len(standard), I.field.p)

    worker = partial(_colon_degree, I, order, M, base, budget.prune_regular_leading)
    values = _evaluate(worker, _standard_candidates(I, standard), budget.workers)
    return min(values)


def delta_unmixed_via_colon(
    I: Ideal,
    order: MonomialOrder,
    d: int,
    budget: Optional[EnumerationBudget] = None,
    unmixedness: Unmixedness = Unmixedness.UNKNOWN,
) -> int:
    """
    delta_I(d) as min deg(S/(I : f)) for unmixed I, cross-checked against delta.

    Raises:
        UnmixednessUnknownError: If unmixedness is neither certified nor asserted
        ValidationError: If every degree-d form lies in I
        InternalConsistencyError: If the two computations disagree on a
            certified ideal
    """
    if not unmixedness.known:
        raise UnmixednessUnknownError("Colon formula for delta requires an unmixed ideal")
    _require_degree(d)
    M = _prepare(I, order)
    if not standard_monomials(M, d):
        raise ValidationError("Colon formula needs a degree-d form outside I", f"d={d}")

    via_colon = vasconcelos(I, order, d, budget)
    direct = delta(I, order, d, budget)
    if via_colon != direct:
        if unmixedness is Unmixedness.CERTIFIED:
            raise InternalConsistencyError(
                "Colon formula disagrees with delta", f"d={d}: {via_colon} vs {direct}"
            )
        logger.warning(
            f"Colon formula gives {via_colon} but delta is {direct} at d={d}; "
            "the unmixedness assertion looks wrong"
        )
    return via_colon


def initial_ideal_unmixed(I: Ideal, order: MonomialOrder) -> bool:
    """True if in(I) is a complete intersection or an unmixed square-free ideal."""
    M = initial_ideal(I, order)
    try:
        if ci_profile(M).is_ci:
            return True
        return M.is_squarefree and is_unmixed_squarefree(M)
    except SizeGuardError:
        return False


def certify_unmixedness(I: Ideal, order: MonomialOrder, asserted: bool = False) -> Unmixedness:
    """
    Decide how far unmixedness of I is known.

    Certified when in(I) is a complete intersection (then so is I) or I is
    an unmixed square-free monomial ideal.
    """
    M = initial_ideal(I, order)
    try:
        if ci_profile(M).is_ci:
            return Unmixedness.CERTIFIED
        if I.is_monomial and M.is_squarefree and is_unmixed_squarefree(M):
            return Unmixedness.CERTIFIED
    except SizeGuardError as e:
        logger.debug(f"Unmixedness certificate skipped: {e}")
    if asserted:
        logger.warning("Unmixedness asserted but not certified")
        return Unmixedness.ASSERTED
    return Unmixedness.UNKNOWN


def fp_via_colon(I: Ideal, order: MonomialOrder, d: int) -> int:
    """min deg(S/(in(I) : t^a)) over standard monomials of degree d."""
    _require_degree(d)
    M = _prepare(I, order)
    standard = standard_monomials(M, d)
    if not standard:
        raise ValidationError("No standard monomials of this degree", f"d={d}")
    return min(hilbert_data(colon_by_monomial(M, a)).degree for a in standard)


def fp(I: Ideal, order: MonomialOrder, d: int) -> int:
    """
    Footprint function fp_I(d).

    fp_I(d) = deg(S/I) - max deg(S/(in(I), t^a)) over standard monomials
    t^a of degree d that are zero-divisors of S/in(I), or deg(S/I) when
    there is none. When in(I) is unmixed and degree d has standard
    monomials, the value is cross-checked against fp_via_colon.
    """
    _require_degree(d)
    M = _prepare(I, order)
    base = hilbert_data(M).degree
    if not standard_monomials(M, d):
        return base
    zero_divisors = zero_divisor_standard_monomials(M, d)
    if zero_divisors:
        value = base - max(hilbert_data(add_monomial(M, a)).degree for a in zero_divisors)
    else:
        value = base

    if initial_ideal_unmixed(I, order):
        via_colon = fp_via_colon(I, order, d)
        if via_colon != value:
            raise InternalConsistencyError(
                "Footprint disagrees with its colon formula", f"d={d}: {value} vs {via_colon}"
            )
    return value


def degree_drop_check(I: Ideal, order: MonomialOrder, f: Polynomial) -> Tuple[int, int, int]:
    """(deg S/I, deg S/(I : f), deg S/(I, f)) for f not in I."""
    if membership(f, I, order):
        raise ValidationError("Polynomial lies in the ideal", f.format())
    return (
        quotient_degree(I, order),
        quotient_degree(colon(I, f, order), order),
        quotient_degree(ideal_sum(I, f, order), order),
    )


def regularity_index_hilbert(M: MonomialIdeal) -> int:
    """
    Least n with H(d) equal to the Hilbert polynomial for every d >= n.

    The difference vanishes beyond deg(h), so the scan stops at deg(h) + 1.
    """
    data = hilbert_data(M)
    window = len(data.numerator)
    values = data.series(window)
    index = window + 1
    for d in range(window, -1, -1):
        if values[d] != data.hilbert_polynomial_value(d):
            break
        index = d
    return index


def _linear_rank(field_p: int, rows: Sequence[Sequence[int]], nvars: int) -> int:
    if not rows:
        return 0
    K = GF(field_p)
    matrix = DomainMatrix([[K(c) for c in row] for row in rows], (len(rows), nvars), K)
    return matrix.rank()


def _linear_row(f: Polynomial) -> List[int]:
    row = [0] * f.nvars
    for mono, c in f.terms.items():
        row[mono.index(1)] = c
    return row


def degree_via_linear_primes(primes: Sequence[Sequence[Polynomial]], f: Polynomial) -> int:
    """
    deg(S/(I : f)) for I the intersection of primes generated by linear forms.

    Each such prime has degree 1, so the value counts the primes not
    containing f.

    Raises:
        ValidationError: If a prime is not given by independent linear forms
        NotGradedError: If f is not homogeneous
    """
    if not f.is_homogeneous:
        raise NotGradedError("Polynomial must be homogeneous", f.format())
    count = 0
    for index, forms in enumerate(primes):
        if not forms:
            raise ValidationError("A prime needs at least one linear form", f"prime {index}")
        for g in forms:
            if not g.is_homogeneous or g.total_degree != 1:
                raise ValidationError("Prime generators must be linear forms", g.format())
        rows = [_linear_row(g) for g in forms]
        rank = _linear_rank(f.field.p, rows, f.nvars)
        if rank != len(rows):
            raise ValidationError("Linear forms of a prime are dependent", f"prime {index}")
        if f.is_zero:
            contains = True
        elif f.total_degree == 1:
            contains = _linear_rank(f.field.p, rows + [_linear_row(f)], f.nvars) == rank
        else:
            contains = membership(f, Ideal.from_generators(list(forms)), MonomialOrder.GREVLEX)
        if not contains:
            count += 1
    return count


def table(
    I: Ideal,
    order: MonomialOrder,
    d_max: int,
    budget: Optional[EnumerationBudget] = None,
    which: FrozenSet[str] = frozenset(COLUMNS),
) -> FunctionTable:
    """
    Tabulate H, delta, fp and vasconcelos for d = 1..d_max.

    Cells whose enumeration exceeds the budget are left empty and named in
    the row's budget_exceeded field.
    """
    unknown = set(which) - set(COLUMNS)
    if unknown:
        raise ValidationError("Unknown table columns", ", ".join(sorted(unknown)))
    budget = budget or EnumerationBudget()
    M = _prepare(I, order)
    data = hilbert_data(M)
    try:
        is_ci = ci_profile(M).is_ci
    except SizeGuardError:
        is_ci = False
    compute = {
        "delta": partial(delta, budget=budget),
        "fp": fp,
        "vasconcelos": partial(vasconcelos, budget=budget),
    }

    rows = []
    for d in range(1, d_max + 1):
        cells: Dict[str, Optional[int]] = {}
        exceeded = []
        for column in COLUMNS:
            if column not in which:
                continue
            try:
                cells[column] = compute[column](I, order, d)
            except BudgetExceededError as e:
                logger.warning(f"{column}({d}) skipped: {e}")
                exceeded.append(column)
        if is_ci and cells.get("delta") is not None and cells.get("fp") is not None:
            if cells["delta"] != cells["fp"]:
                logger.warning(
                    f"delta({d}) = {cells['delta']} differs from fp({d}) = {cells['fp']} "
                    "although in(I) is a complete intersection"
                )
        row = TableRow(d, hilbert_function(M, d), budget_exceeded=tuple(exceeded), **cells)
        logger.info(
            f"d={row.d} H={row.hilbert} delta={row.delta} fp={row.fp} "
            f"vasconcelos={row.vasconcelos}"
        )
        rows.append(row)
    return FunctionTable(data.degree, data.dimension, str(order), str(I.field), tuple(rows))


def _hypotheses_hold(I: Ideal, order: MonomialOrder) -> bool:
    M = initial_ideal(I, order)
    if not I.is_monomial:
        return False
    try:
        return ci_profile(M).is_ci and hilbert_data(M).dimension >= 1
    except SizeGuardError:
        return False


def delta_regularity_index(
    I: Ideal,
    order: MonomialOrder,
    budget: Optional[EnumerationBudget] = None,
    cap: int = 10,
    asserted: bool = False,
) -> int:
    """
    r_0: the least d with delta_I(d) = 1.

    Args:
        asserted: The caller vouches that I is unmixed and radical with
            linear associated primes; complete-intersection monomial ideals
            of positive dimension need no assertion

    Raises:
        InconclusiveError: If the hypotheses are not met or the cap is reached
    """
    if cap < 1:
        raise ValidationError("Scan cap must be at least 1", str(cap))
    if not asserted and not _hypotheses_hold(I, order):
        raise InconclusiveError(
            "delta is only known to reach 1 for unmixed radical ideals with linear primes "
            "or monomial complete intersections"
        )
    for d in range(1, cap + 1):
        value = delta(I, order, d, budget)
        logger.debug(f"r0 scan: delta({d}) = {value}")
        if value == 1:
            return d
    raise InconclusiveError("delta did not reach 1 within the scan cap", f"cap={cap}")


def conjecture_report(
    I: Ideal,
    order: MonomialOrder,
    budget: Optional[EnumerationBudget] = None,
    cap: int = 10,
    asserted: bool = False,
) -> ConjectureReport:
    """
    Compare r_0 with the regularity index of S/in(I).

    The comparison is only meaningful for one-dimensional quotients, where
    the regularity index equals the Castelnuovo-Mumford regularity; a
    failure is logged, never raised.
    """
    r0 = delta_regularity_index(I, order, budget, cap, asserted)
    M = initial_ideal(I, order)
    dimension = hilbert_data(M).dimension
    ri = regularity_index_hilbert(M)
    holds: Optional[bool] = None
    if dimension == 1:
        holds = r0 <= ri
        if not holds:
            logger.warning(f"r0 = {r0} exceeds the regularity index {ri}")
    return ConjectureReport(r0, ri, dimension, holds)
