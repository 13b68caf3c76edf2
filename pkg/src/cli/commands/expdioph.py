import click

from src.cli.common import Emitter, build_config, handle_errors, run_options
from src.core.validation import parse_int
from src.enums.command import Command
from src.schemas import ExpDiophFamily
from src.services.expdioph import classify_even_T3, search_family


@click.command()
@click.argument("family", type=click.Choice([f.value for f in ExpDiophFamily]))
@click.argument("q")
@click.argument("l")
@click.option("--box", type=int, default=30, show_default=True, help="Side of the exponent box.")
@run_options
@handle_errors
def expdioph(family, q, l, box, exp_bound, mode, structured, budget, out):  # noqa: E741
    """Solutions of a T1/T2/T3/T3' identity in the box [1, BOX]^3."""
    config = build_config(Command.EXPDIOPH, exp_bound, mode, structured, budget, out)
    family = ExpDiophFamily(family)
    q, l = parse_int(q, "q"), parse_int(l, "l")  # noqa: E741
    # without --budget the search keeps its own box budget
    search_budget = config.budget if budget is not None else None
    instances = search_family(family, q, l, box, box, box, budget=search_budget)

    classification = None
    agrees = None
    if family is ExpDiophFamily.T3:
        classification = classify_even_T3(q, l)
        found = {(i.r, i.s, i.t // 2) for i in instances if i.eps == -1 and i.t % 2 == 0}
        expected = {(r, s, t) for r, s, t in classification if r <= box and s <= box and 2 * t <= box}
        agrees = found == expected

    with Emitter(config) as emitter:
        if emitter.structured:
            for instance in instances:
                emitter.record("instance", instance)
            if classification is not None:
                emitter.record(
                    "even_t3_classification",
                    {"q": q, "l": l, "solutions": [list(v) for v in classification], "agrees_with_search": agrees},
                )
            return
        emitter.line(f"{family.value} for q={q}, l={l}, box {box}: {len(instances)} solutions")
        for instance in instances:
            emitter.line(f"  {instance}")
        if classification is not None:
            shown = ", ".join(f"(r={r}, s={s}, t={t})" for r, s, t in classification) or "none"
            emitter.line(f"even-exponent classification: {shown}")
            emitter.line(f"search agrees with classification: {'yes' if agrees else 'NO'}")
