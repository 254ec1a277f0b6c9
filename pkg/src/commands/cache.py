from pathlib import Path
from typing import Optional
import sys

import click

from ..utils.coeff_cache import CoeffCache
from ..utils.exceptions import LNDError
from . import fail


@click.command("cache")
@click.argument("action", type=click.Choice(["build", "clear", "stat"]))
@click.option("--n-max", type=click.IntRange(min=0), default=50, show_default=True, help="Highest degree to build")
@click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None, help="Cache directory")
@click.pass_context
def cache(ctx: click.Context, action: str, n_max: int, cache_dir: Optional[Path]):
    """Build, clear or describe the on-disk coefficient cache."""
    store = CoeffCache(cache_dir or (ctx.obj or {}).get("cache_dir"))
    try:
        if action == "build":
            result = store.build(n_max, progress=sys.stderr.isatty())
            click.echo(f"built {store.cache_dir}: {result.written} written, {result.skipped} already valid")
        elif action == "clear":
            click.echo(f"cleared {store.cache_dir}: {store.clear()} removed")
        else:
            stat = store.stat()
            max_n = "none" if stat.max_n is None else stat.max_n
            click.echo(f"cache {stat.path}: {stat.count} entries, max n {max_n}")
    except LNDError as e:
        fail(e)
