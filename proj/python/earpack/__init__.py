"""Matching extension, cyclic edge-connectivity and odd ear packings."""

import json

from ._core import Graph, named, version
from . import _core

__all__ = [
    "Graph",
    "named",
    "version",
    "analyze",
    "cyclic_edge_connectivity",
    "extend",
    "check_theorem",
    "ear_packing",
    "sweep",
    "construct",
]


def analyze(g):
    """Order, degree, girth, bipartiteness and both connectivities."""
    return json.loads(_core._analyze(g))


def cyclic_edge_connectivity(g, odd=False):
    """Value and certifying cut; "inf" when no cyclic cut exists."""
    return json.loads(_core._lambda(g, odd))


def extend(g, matching):
    """Perfect matching containing `matching`, or a barrier certificate."""
    return json.loads(_core._extend(g, list(matching)))


def check_theorem(g, matching):
    return json.loads(_core._check_theorem(g, list(matching)))


def ear_packing(g, u, target=None):
    return json.loads(_core._ears(g, sorted(u), target))


def sweep(degrees=(3,), n_min=8, n_max=14, samples=100, seed=1, bipartite_only=False):
    return json.loads(_core._sweep(list(degrees), n_min, n_max, samples, seed, bipartite_only))


def construct(family, size=2, r=3, seed=1):
    """Returns (graph, sidecar) for one of the named construction families."""
    g, sidecar = _core._construct(family, size, r, seed)
    return g, json.loads(sidecar)
