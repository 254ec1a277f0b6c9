import csv
import io

import click

from ..utils.dpolys import b_poly, c_poly, r_poly
from ..utils.exceptions import LNDError
from ..utils.formatting import format_fraction, to_json
from ..utils.legendre_basis import to_monomial
from . import fail

POLYS = {"R": r_poly, "B": b_poly, "C": c_poly}


@click.command("coeffs")
@click.option("--poly", type=click.Choice(list(POLYS)), required=True, help="Polynomial to print")
@click.option("--n", type=click.IntRange(min=0), required=True, help="Degree")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--basis", type=click.Choice(["legendre", "monomial"]), default="legendre", show_default=True)
def coeffs(poly: str, n: int, fmt: str, basis: str):
    """
    Print the exact coefficients of R_n, B_n or C_n.

    Legendre coefficients are listed from P_0 up; monomial coefficients from
    the highest power down.
    """
    try:
        series = POLYS[poly](n)
    except LNDError as e:
        fail(e)
    if basis == "monomial":
        values = list(reversed(to_monomial(series)))
        order = "descending"
    else:
        values = list(series.coeffs)
        order = "ascending"
    rendered = [format_fraction(v) for v in values]

    if fmt == "json":
        click.echo(to_json({"poly": poly, "n": n, "basis": basis, "order": order, "coeffs": rendered}))
        return
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerow(rendered)
    click.echo(buffer.getvalue(), nl=False)
