from typing import Optional

import click

from ..utils.coeff_cache import CoeffCache
from ..utils.derivs import (
    DerivativeResult,
    DomainClass,
    EvalPoint,
    d2P_dnu2_anydeg,
    dP_dnu,
    dQ_dnu_offcut,
    dQ_dnu_oncut,
)
from ..utils.dpolys import CoeffTriple
from ..utils.exceptions import LNDError
from ..utils.formatting import complex_record, to_json
from . import POINT, fail

FUNCS = ("dP", "d2P", "dQ")


def evaluate(func: str, n: int, z: complex, triple: Optional[CoeffTriple] = None) -> DerivativeResult:
    """
    Evaluate one derivative at a strictly classified point.

    Exact reals in (-1, 1) go to the on-cut forms, exact +-1 to the endpoint
    rules, everything else to the off-cut forms. A triple, when given, must be
    the one for the degree actually evaluated (-n-1 for negative d2P degrees).
    """
    point = EvalPoint.classify(z)
    if func == "dP":
        return dP_dnu(n, point, triple)
    if func == "d2P":
        return d2P_dnu2_anydeg(n, point, triple)
    if point.domain_class is DomainClass.ON_CUT_INTERVAL:
        return dQ_dnu_oncut(n, point.x, triple)
    return dQ_dnu_offcut(n, point.value, triple)


def cached_triple(cache: CoeffCache, func: str, n: int) -> Optional[CoeffTriple]:
    """
    Coefficients for evaluating func at degree n, read from the cache.

    Misses are generated but not written back. Returns None for a negative
    dP or dQ degree so the evaluator reports the domain error itself.
    """
    if n < 0 and func != "d2P":
        return None
    return cache.get_or_generate(n if n >= 0 else -n - 1, store=False)


@click.command("eval")
@click.option("--func", type=click.Choice(FUNCS), required=True, help="Derivative to evaluate")
@click.option("--n", type=int, required=True, help="Degree (negative allowed for d2P)")
@click.option("--z", "z", type=POINT, required=True, help='Point as "re" or "re,im"')
@click.pass_context
def evaluate_command(ctx: click.Context, func: str, n: int, z: complex):
    """Evaluate a derivative and print a JSON record."""
    try:
        triple = cached_triple(CoeffCache((ctx.obj or {}).get("cache_dir")), func, n)
        result = evaluate(func, n, z, triple)
    except LNDError as e:
        fail(e, as_json=True)
    click.echo(
        to_json(
            {
                "func": func,
                "n": n,
                "z": complex_record(z),
                "value": complex_record(result.value),
                "formula": result.formula,
            }
        )
    )
