"""Subcommands of the ``lnd`` command line; each module exposes one click command."""

import sys
from typing import List

import click
from loguru import logger

from ..utils.exceptions import DomainError, LNDError
from ..utils.formatting import parse_grid, parse_point, to_json


class PointType(click.ParamType):
    """A point written as "re" or "re,im"."""

    name = "point"

    def convert(self, value, param, ctx) -> complex:
        if isinstance(value, complex):
            return value
        try:
            return parse_point(value)
        except DomainError as e:
            self.fail(e.message, param, ctx)


class GridType(click.ParamType):
    """An axis written as "start:stop:count"."""

    name = "grid"

    def convert(self, value, param, ctx) -> List[float]:
        if isinstance(value, list):
            return value
        try:
            return parse_grid(value)
        except DomainError as e:
            self.fail(e.message, param, ctx)


POINT = PointType()
GRID = GridType()


def fail(error: LNDError, as_json: bool = False) -> None:
    """
    Report an error and exit with its exit code.

    Args:
        error: The error to report
        as_json: Print the machine-readable record to stdout instead of a message to stderr
    """
    logger.debug(f"{error.code}: {error.message}")
    if as_json:
        click.echo(to_json(error.to_dict()))
    else:
        click.echo(f"Error ({error.code}): {error.message}", err=True)
    sys.exit(error.exit_code)
