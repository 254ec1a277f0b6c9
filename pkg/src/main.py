"""
Command-line entry point.

    lnd coeffs --poly C --n 3 --format csv --basis monomial
    lnd eval --func d2P --n 0 --z 0
    lnd table --func dQ --n-max 2 --grid -0.5:0.5:3
    lnd verify --suite all --n-max 6
    lnd cache build --n-max 50
"""

from pathlib import Path
from typing import Optional
import sys

import click
from loguru import logger

from .settings import get_settings
from .commands import cache, coeffs, evaluate, table, verify

# Load settings
settings = get_settings()


def configure_logging() -> None:
    """Send logs to stderr (and optionally a rotating file); stdout is reserved for output."""
    level = "DEBUG" if settings.DEBUG else settings.LOG_LEVEL
    logger.remove()
    logger.add(sys.stderr, level=level)
    if settings.LOG_FILE:
        logger.add(
            settings.LOG_FILE,
            rotation="500 MB",
            retention="10 days",
            level=level
        )


@click.group()
@click.version_option(version="0.1.0", prog_name="lnd")
@click.option(
    "--cache-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Coefficient cache directory (overrides LND_CACHE_DIR)",
)
@click.pass_context
def cli(ctx: click.Context, cache_dir: Optional[Path]):
    """Degree-derivatives of Legendre functions with exact coefficients."""
    configure_logging()
    ctx.ensure_object(dict)
    ctx.obj["cache_dir"] = cache_dir or settings.CACHE_DIR
    logger.debug(f"{settings.APP_NAME}: cache at {ctx.obj['cache_dir']}, {settings.MAX_WORKERS} workers")


# Include commands
cli.add_command(coeffs.coeffs)
cli.add_command(evaluate.evaluate_command)
cli.add_command(table.table)
cli.add_command(verify.verify)
cli.add_command(cache.cache)


if __name__ == "__main__":
    cli()
