import io

import click

from src.cli.common import Emitter, build_config, handle_errors, run_options
from src.core.exceptions import InvalidInputError
from src.enums.command import Command
from src.services.corpus_service import CorpusService
from src.services.families import FAMILIES, sample_family
from src.services.serialization import print_record


@click.command()
@click.option("--bound", type=int, default=None, help="Coefficient bound for the range sweep.")
@click.option("--radical", type=int, default=None, help="Only coefficients whose primes divide this number.")
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), default=None, help="Triples to check.")
@click.option("--family", type=click.Choice(sorted(FAMILIES)), default=None, help="Sample a named family.")
@click.option("--count", type=int, default=20, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=None)
@click.option("--timing/--no-timing", default=False, help="Add an elapsed_ms column.")
@run_options
@handle_errors
def corpus(bound, radical, path, family, count, seed, workers, timing, exp_bound, mode, structured, budget, out):
    """Check many triples; writes a tab separated table and a verdict histogram."""
    if family is not None and mode is None:
        mode = FAMILIES[family].mode.value
    config = build_config(Command.CORPUS, exp_bound, mode, structured, budget, out, workers=workers)
    sources = [v is not None for v in (bound, path, family)]
    if sum(sources) != 1:
        raise InvalidInputError("give exactly one of --bound, --file or --family", field="source")

    service = CorpusService(mode=config.mode, workers=config.workers)
    if bound is not None:
        triples = list(service.iter_range(bound, radical))
    elif path is not None:
        triples = service.read_file(path)
    else:
        triples = sample_family(family, count, seed)

    rows = service.run(triples)
    buffer = io.StringIO()
    service.write_table(rows, buffer, timing=timing)
    histogram = service.histogram(rows)

    with Emitter(config) as emitter:
        emitter.line(buffer.getvalue().rstrip("\n"))
    # the table file stays a plain TSV; the summary goes to stderr beside it
    to_stderr = config.out is not None
    if structured:
        click.echo(print_record("histogram", histogram, message=f"{len(rows)} triples"), err=to_stderr)
    else:
        click.echo("  ".join(f"{k}={v}" for k, v in histogram.items()), err=to_stderr)
