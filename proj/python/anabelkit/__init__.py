"""p-adic local fields, anabelomorphy verdicts and Tate's algorithm."""

import json

from ._core import (
    DEFAULT_PRECISION,
    DomainError,
    Element,
    Field,
    PrecisionError,
    Report,
)
from . import _core

__all__ = [
    "DEFAULT_PRECISION", "DomainError", "Element", "Field", "PrecisionError", "Report",
    "check_anab", "disc", "conductor", "tate", "table", "search", "data",
]


def data(report):
    """The report's records as Python objects."""
    return json.loads(report.json)


def check_anab(spec1, spec2, precision=DEFAULT_PRECISION):
    # exit_code: 0 anabelomorphic, 1 not, 2 undecided
    return _core.check_anab(spec1, spec2, precision)


def disc(spec, precision=DEFAULT_PRECISION):
    return _core.disc(spec, precision)


def conductor(spec, precision=DEFAULT_PRECISION):
    return _core.conductor(spec, precision)


def tate(curve, spec, precision=DEFAULT_PRECISION):
    return _core.tate(curve, spec, precision)


def table(name, rows=None, first=-1, threads=1):
    return _core.table(name, rows, first, threads)


def search(field_k, field_l, count=5, filter="any", seed=1, threads=1):
    return _core.search(field_k, field_l, count, filter, seed, threads)
