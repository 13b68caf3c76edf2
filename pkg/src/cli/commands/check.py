import sys

import click

from src.cli.common import EXIT_CODES, INTEGER_ARGS, Emitter, build_config, handle_errors, run_options
from src.core.validation import parse_int, validate_nonzero
from src.enums.command import Command
from src.schemas import Tern, VerdictKind
from src.services.criteria import check_af, explain, tripwire, tripwire_note


@click.command(context_settings=INTEGER_ARGS)
@click.argument("a")
@click.argument("b")
@click.argument("c")
@run_options
@click.option("--tripwire/--no-tripwire", "run_tripwire", default=False, help="Re-run the oracle on certified targets.")
@handle_errors
def check(a, b, c, exp_bound, mode, structured, budget, out, run_tripwire):
    """Decide the asymptotic Fermat criteria for a x^p + b y^p + c z^p = 0."""
    config = build_config(Command.CHECK, exp_bound, mode, structured, budget, out)
    coefficients = [validate_nonzero(parse_int(value, name), name) for name, value in zip("abc", (a, b, c))]
    verdict = check_af(Tern.of(coefficients), config.mode)
    if run_tripwire and verdict.kind is VerdictKind.FINITE:
        skipped = tripwire(verdict.certificates, config.exp_bound, config.budget)
        if skipped:
            message = "; ".join(filter(None, (verdict.message, tripwire_note(skipped))))
            verdict = verdict.model_copy(update={"message": message})

    proof = explain(verdict)
    with Emitter(config) as emitter:
        if emitter.structured:
            emitter.record("verdict", verdict)
            for cert in verdict.certificates:
                emitter.record("certificate", cert)
            emitter.record("proof", proof)
        else:
            emitter.line(proof.render())
    sys.exit(EXIT_CODES[verdict.kind])
