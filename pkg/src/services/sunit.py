"""Proper points of S-unit equations and the bounded enumeration oracle.

Every "no proper points" statement produced by the certificate generators is
cross-checked against ``enumerate_proper_points``. Oracle results only cover
coordinates whose exponents are at most ``exp_bound``; they are evidence, not proof.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from math import gcd
from typing import List, Optional, Sequence, Tuple

import structlog

from src.core.config import get_settings
from src.core.exceptions import BudgetExceededError
from src.core.validation import validate_positive
from src.schemas import LineEq, ProperPoint, SSet
from src.services.ntkernel import canonical_triple, rad, unit_exponents

logger = structlog.get_logger(__name__)


def is_proper(x: int, y: int, z: int, line: LineEq, s: SSet) -> bool:
    """True iff the primitive rescaling of (x, y, z) is a proper point of line over s."""
    g = gcd(gcd(x, y), z)
    if g == 0:
        return False
    x, y, z = x // g, y // g, z // g
    if x * y * z == 0 or line.evaluate(x, y, z) != 0:
        return False
    if rad(x * y * z) != s:
        return False
    ax, by, cz = line.a * x, line.b * y, line.c * z
    return gcd(ax, by) == 1 and gcd(ax, cz) == 1 and gcd(by, cz) == 1


def s_units(s: SSet, exp_bound: int) -> List[int]:
    """Positive integers whose prime factors lie in s, each exponent at most exp_bound."""
    units = [1]
    for p in s.primes:
        powers = [p**e for e in range(exp_bound + 1)]
        units = [u * w for u, w in product(units, powers)]
    return sorted(units)


def lattice_nodes(s: SSet, exp_bound: int) -> int:
    """Size of the (x, y) search lattice: positive x times signed y."""
    units = (exp_bound + 1) ** len(s.primes)
    return 2 * units * units


def _point_order(point: Tuple[int, int, int]) -> Tuple[int, Tuple[int, int, int]]:
    return (max(abs(v) for v in point), point)


def _search_chunk(
    line: LineEq, s: SSet, exp_bound: int, x_units: Sequence[int], y_units: Sequence[int]
) -> List[Tuple[int, int, int]]:
    """Solve the line for z over one slice of x values; x > 0 fixes the projective sign."""
    found = set()
    for x in x_units:
        ax = line.a * x
        for y in y_units:
            numerator = -(ax + line.b * y)
            if numerator == 0 or numerator % line.c != 0:
                continue
            z = numerator // line.c
            exponents = unit_exponents(z, s.primes)
            if exponents is None or any(e > exp_bound for e in exponents):
                continue
            if is_proper(x, y, z, line, s):
                found.add(canonical_triple(x, y, z))
    return list(found)


def _partition(values: Sequence[int], parts: int) -> List[Sequence[int]]:
    parts = max(1, min(parts, len(values)))
    return [values[i::parts] for i in range(parts)]


def enumerate_proper_points(
    line: LineEq,
    s: SSet,
    exp_bound: int,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[ProperPoint]:
    """All proper points with S-unit coordinates of exponent at most exp_bound.

    Args:
        line: The line aX + bY + cZ = 0
        s: The exact radical required of xyz
        exp_bound: Per-prime exponent bound on every coordinate
        budget: Node budget, defaults to NODE_BUDGET
        workers: Process pool width, defaults to WORKERS

    Returns:
        Canonical representatives, sorted by height then coordinates

    Raises:
        BudgetExceededError: If the (x, y) lattice is larger than the budget
    """
    validate_positive(exp_bound, "exp_bound")
    settings = get_settings()
    budget = budget if budget is not None else settings.NODE_BUDGET
    workers = workers if workers is not None else settings.WORKERS

    positive = s_units(s, exp_bound)
    signed = [sign * u for u in positive for sign in (1, -1)]
    nodes = lattice_nodes(s, exp_bound)
    if nodes > budget:
        logger.warning("sunit_budget_exceeded", line=str(line), s=str(s), exp_bound=exp_bound, nodes=nodes)
        raise BudgetExceededError(
            f"enumeration of {line} over S={s} needs {nodes} nodes, budget is {budget}",
            requested=nodes,
            budget=budget,
            progress={"units": len(positive), "exp_bound": exp_bound},
        )

    started = time.perf_counter()
    chunks = _partition(positive, workers)
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search_chunk, line, s, exp_bound, chunk, signed) for chunk in chunks]
            results = [f.result() for f in futures]
    else:
        results = [_search_chunk(line, s, exp_bound, chunk, signed) for chunk in chunks]

    merged = sorted({point for chunk in results for point in chunk}, key=_point_order)
    logger.info(
        "sunit_enumeration",
        line=str(line),
        s=str(s),
        exp_bound=exp_bound,
        nodes=nodes,
        found=len(merged),
        duration_ms=round((time.perf_counter() - started) * 1000, 2),
    )
    return [ProperPoint(x=x, y=y, z=z, line=line, s=s) for x, y, z in merged]


def has_proper_points(line: LineEq, s: SSet, exp_bound: int, budget: Optional[int] = None) -> bool:
    return bool(enumerate_proper_points(line, s, exp_bound, budget=budget))
