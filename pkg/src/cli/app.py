import click

from src.cli.commands import check, corpus, expdioph, frey, sunit
from src.core.config import get_settings
from src.core.logging import configure_logging


@click.group()
@click.option("--log-level", default=None, help="Overrides LOG_LEVEL.")
def cli(log_level):
    """Asymptotic Fermat criteria for a x^p + b y^p + c z^p = 0."""
    settings = get_settings()
    configure_logging(log_level or settings.LOG_LEVEL, settings.LOG_JSON)


for command in (check, sunit, expdioph, frey, corpus):
    cli.add_command(command)
