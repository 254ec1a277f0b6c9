from typing import Optional

import click

from ..utils.exceptions import LNDError
from ..utils.formatting import to_json
from ..utils.verification import SUITE_NAMES, run_suite
from . import fail


@click.command("verify")
@click.option("--suite", type=click.Choice(SUITE_NAMES), required=True, help="Identity suite to run")
@click.option("--n-max", type=click.IntRange(min=0), default=3, show_default=True, help="Highest degree")
@click.option("--tol", type=click.FloatRange(min=0, min_open=True), default=None, help="Oracle tolerance")
@click.option("--seed", type=int, default=None, help="Seed for random points")
def verify(suite: str, n_max: int, tol: Optional[float], seed: Optional[int]):
    """Run a verification suite, print its JSON report and exit 1 on any failure."""
    try:
        report = run_suite(suite, n_max, tol=tol, seed=seed)
    except LNDError as e:
        fail(e)
    click.echo(to_json(report.model_dump()))
    if not report.ok:
        click.echo(f"{report.summary['failed']} of {report.summary['total']} cases failed", err=True)
        raise SystemExit(1)
