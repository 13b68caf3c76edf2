import time

import click

from src.cli.common import Emitter, build_config, handle_errors, run_options
from src.core.validation import parse_int_list, validate_positive
from src.enums.command import Command
from src.schemas import LineEq, SSet
from src.services.sunit import enumerate_proper_points, lattice_nodes


@click.command()
@click.option("-r", "r", type=int, required=True, help="Exponent of 2 in 2^r X + Y + Z.")
@click.option("-S", "primes", default="", help="Comma separated primes, e.g. 3,5.")
@run_options
@handle_errors
def sunit(r, primes, exp_bound, mode, structured, budget, out):
    """Bounded search for proper points of 2^r X + Y + Z = 0 over S."""
    config = build_config(Command.SUNIT, exp_bound, mode, structured, budget, out)
    validate_positive(r, "r", minimum=0)
    s = SSet.of(parse_int_list(primes, "S"))
    line = LineEq.two_power(r)

    started = time.perf_counter()
    points = enumerate_proper_points(line, s, config.exp_bound, budget=config.budget, workers=config.workers)
    elapsed_ms = round((time.perf_counter() - started) * 1000, 3)

    with Emitter(config) as emitter:
        if emitter.structured:
            emitter.record(
                "proper_points",
                {
                    "line": str(line),
                    "s": list(s.primes),
                    "exp_bound": config.exp_bound,
                    "nodes": lattice_nodes(s, config.exp_bound),
                    "elapsed_ms": elapsed_ms,
                    "points": [list(p.coordinates) for p in points],
                },
                message="bounded search; an empty list is evidence, not a proof",
            )
            return
        emitter.line(f"{line} = 0 over S={s}, exponents <= {config.exp_bound}")
        for point in points:
            emitter.line(f"  {point}")
        if not points:
            emitter.line("  no proper points in the box (bounded search, not a proof)")
