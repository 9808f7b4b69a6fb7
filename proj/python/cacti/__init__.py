"""Cellular chains of cacti and their action on Hochschild cochains.

Trees are strings in the grammar root(w<label;dec;mark>(b(...)...)).
Chains, cochains and algebras are the JSON objects of the command line, as dicts.
"""

import json

from . import _core
from ._core import (
    AxiomError,
    GraphError,
    InvariantError,
    ParseError,
    SuiteError,
    contract_edge,
    degree,
    dual_tree,
    enumerate_cells,
    graph_from_tree,
    normalize_tree,
    suite_names,
)

__all__ = [
    "AxiomError",
    "GraphError",
    "InvariantError",
    "ParseError",
    "SuiteError",
    "act",
    "algebra",
    "boundary",
    "compose",
    "contract_edge",
    "correlate",
    "degree",
    "dual_tree",
    "enumerate_cells",
    "graph_from_tree",
    "graph_info",
    "hh",
    "hh_op",
    "homology",
    "normalize_tree",
    "random_cochain",
    "run_suite",
    "suite_names",
]


def _cochains(cochains):
    return json.dumps(cochains if isinstance(cochains, (list, dict)) else list(cochains))


def boundary(tree_or_chain):
    """Boundary of a tree string or of a chain dict."""
    if isinstance(tree_or_chain, dict):
        return json.loads(_core.boundary_chain(json.dumps(tree_or_chain)))
    return json.loads(_core.boundary(tree_or_chain))


def compose(left, slot, right):
    return json.loads(_core.compose(left, slot, right))


def act(tree, cochains, algebra=""):
    return json.loads(_core.act(tree, _cochains(cochains), algebra))


def correlate(tree, cochains, a0, tails, algebra=""):
    """eta(a0, act(tree, cochains)(tails)) as a fraction string."""
    inputs = {"cochains": cochains, "a0": a0, "tails": tails}
    return _core.correlate(tree, json.dumps(inputs), algebra)


def hh_op(op, cochains, algebra=""):
    return json.loads(_core.hh_op(op, _cochains(cochains), algebra))


def hh(algebra, degree):
    return json.loads(_core.hh(algebra, degree))


def algebra(spec):
    return json.loads(_core.algebra(spec))


def random_cochain(algebra, arity, seed=1):
    return json.loads(_core.random_cochain(algebra, arity, seed))


def homology(n, spineless=False):
    return json.loads(_core.homology(n, spineless))


def run_suite(name, n=0, max_degree=-1, algebra="", seed=1, trials=0):
    return json.loads(_core.run_suite(name, n, max_degree, algebra, seed, trials))


def graph_info(graph):
    return json.loads(_core.graph_info(graph))
