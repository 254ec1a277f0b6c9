import csv
import io
from typing import List

import click
from loguru import logger

from ..utils.coeff_cache import CoeffCache
from ..utils.exceptions import LNDError
from ..utils.formatting import format_float
from . import GRID, fail
from .evaluate import FUNCS, cached_triple, evaluate

HEADER = ["n", "z_re", "z_im", "value_re", "value_im", "error"]


@click.command("table")
@click.option("--func", type=click.Choice(FUNCS), required=True, help="Derivative to tabulate")
@click.option("--n-max", type=click.IntRange(min=0), required=True, help="Highest degree")
@click.option("--grid", type=GRID, required=True, help='Real axis as "start:stop:count"')
@click.option("--grid-im", type=GRID, default="0:0:1", show_default=True, help='Imaginary axis as "start:stop:count"')
@click.pass_context
def table(ctx: click.Context, func: str, n_max: int, grid: List[float], grid_im: List[float]):
    """
    Print a CSV table of derivative values over a grid.

    Points where the evaluation is refused keep their row, with empty value
    fields and the error code in the last column.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    cache = CoeffCache((ctx.obj or {}).get("cache_dir"))
    failures = 0
    for n in range(n_max + 1):
        try:
            triple = cached_triple(cache, func, n)
        except LNDError as e:
            fail(e)
        for im in grid_im:
            for re in grid:
                z = complex(re, im)
                try:
                    value = evaluate(func, n, z, triple).value
                    row = [format_float(value.real), format_float(value.imag), ""]
                    writer.writerow([n, format_float(re), format_float(im), *row])
                except LNDError as e:
                    failures += 1
                    writer.writerow([n, format_float(re), format_float(im), "", "", e.code])
    if failures:
        logger.info(f"Table for {func}: {failures} points refused")
    click.echo(buffer.getvalue(), nl=False)
