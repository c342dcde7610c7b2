"""Python front end to the folklab arrowing kernels."""

import json

from ._core import (
    ArityError,
    CapacityError,
    DomainError,
    Graph,
    ParseError,
    UnknownValueError,
    ValidationError,
    __version__,
    q_graph,
)
from . import _core

__all__ = [
    "ArityError",
    "CapacityError",
    "DomainError",
    "Graph",
    "ParseError",
    "UnknownValueError",
    "ValidationError",
    "__version__",
    "arrows",
    "certify_theorem1",
    "cnf",
    "oracle",
    "q_graph",
    "registry",
]


def arrows(mode, graph, tuple_, max_nodes=None, max_seconds=None, workers=1):
    """Decide graph ->mode tuple_; returns the verdict as a dict."""
    return json.loads(_core.arrows_json(mode, graph, list(tuple_), max_nodes, max_seconds, workers))


def oracle(mode, graph, tuple_):
    """Exhaustive enumeration; only for tiny instances."""
    return json.loads(_core.oracle_json(mode, graph, list(tuple_)))


def cnf(mode, graph, tuple_):
    """DIMACS text whose models are free two-colourings."""
    return _core.cnf(mode, graph, list(tuple_))


def registry():
    return json.loads(_core.registry_json())


def certify_theorem1(a, alpha=0, u=None, max_nodes=100_000_000, max_seconds=60.0, workers=1):
    return json.loads(_core.certify_theorem1_json(a, alpha, u, max_nodes, max_seconds, workers))
