"""Rendering of exact and floating values, and parsing of CLI point/grid arguments."""

from enum import Enum
from fractions import Fraction
from typing import Any, Iterator, List
import json
import math

import numpy as np

from .exceptions import DomainError


def format_float(x: float) -> str:
    """17 significant digits, round-trip safe; negative zero prints as 0."""
    x = float(x)
    if x == 0:
        x = 0.0
    return format(x, ".17g")


def format_fraction(value: Fraction) -> str:
    return str(Fraction(value))


def complex_record(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


class ReportEncoder(json.JSONEncoder):
    """
    Deterministic JSON: keys in insertion order, floats with 17 significant
    digits (non-finite as null), fractions as strings, complex numbers as
    {"re": ..., "im": ...}.
    """

    def default(self, o: Any) -> Any:
        if isinstance(o, Fraction):
            return format_fraction(o)
        if isinstance(o, complex):
            return complex_record(o)
        if isinstance(o, Enum):
            return o.value
        return super().default(o)

    def iterencode(self, o: Any, _one_shot: bool = False) -> Iterator[str]:
        # The stock encoder hardcodes float.__repr__; swap in format_float
        def floatstr(x: float) -> str:
            return format_float(x) if math.isfinite(x) else "null"

        markers = {} if self.check_circular else None
        encode_str = json.encoder.encode_basestring_ascii if self.ensure_ascii else json.encoder.encode_basestring
        _iterencode = json.encoder._make_iterencode(
            markers,
            self.default,
            encode_str,
            self.indent,
            floatstr,
            self.key_separator,
            self.item_separator,
            self.sort_keys,
            self.skipkeys,
            _one_shot,
        )
        return _iterencode(o, 0)


def to_json(obj: Any) -> str:
    return json.dumps(obj, cls=ReportEncoder)


def parse_point(text: str) -> complex:
    """
    Parse "re" or "re,im".

    Raises:
        DomainError: malformed or non-finite input
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (1, 2) or not all(parts):
        raise DomainError(f"Point must be 're' or 're,im', got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError as e:
        raise DomainError(f"Point must be numeric, got {text!r}") from e
    if not all(np.isfinite(values)):
        raise DomainError(f"Point must be finite, got {text!r}")
    return complex(values[0], values[1] if len(values) == 2 else 0.0)


def parse_grid(spec: str) -> List[float]:
    """
    Parse "start:stop:count" into count evenly spaced values, endpoints included.

    Raises:
        DomainError: malformed spec or count < 1
    """
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"Grid must be 'start:stop:count', got {spec!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as e:
        raise DomainError(f"Grid must be 'start:stop:count', got {spec!r}") from e
    if count < 1:
        raise DomainError(f"Grid count must be >= 1, got {count}")
    if count == 1:
        return [start]
    return [float(v) for v in np.linspace(start, stop, count)]
