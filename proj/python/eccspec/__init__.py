"""Exact eccentricity-matrix spectra of graphs."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    EccspecError,
    census_count,
    ecc_matrix,
    family,
    is_irreducible,
    multiplicity as _multiplicity,
    order,
    resolve,
    suite_names,
)

__all__ = [
    "EccspecError",
    "census_count",
    "charpoly",
    "classify",
    "ecc_matrix",
    "family",
    "hl_index",
    "is_irreducible",
    "multiplicity",
    "order",
    "resolve",
    "suite_names",
    "verify",
]


def charpoly(graph):
    """Ascending integer coefficients of the characteristic polynomial."""
    return [int(c) for c in _core.charpoly(graph)]


def multiplicity(graph, xi):
    return _multiplicity(graph, str(Fraction(xi)))


def hl_index(graph):
    lo, hi = _core.hl_index(graph)
    return Fraction(lo), Fraction(hi)


def classify(n, jobs=1):
    records = _core.classify(n, jobs)
    for r in records:
        r["charpoly"] = [int(c) for c in r["charpoly"]]
    return records


def verify(suite, n_values=(), seed=None, jobs=1):
    """Run a verification suite and return the report as a dict."""
    kwargs = {"n_values": list(n_values), "jobs": jobs}
    if seed is not None:
        kwargs["seed"] = seed
    return json.loads(_core.run_suite(suite, **kwargs))
