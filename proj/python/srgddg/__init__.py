"""Strongly regular graphs, Hoffman cocliques and divisible design graphs."""

import json

from ._srgddg import (
    Graph,
    SrgddgError,
    are_isomorphic,
    certificate,
    complete,
    composition,
    construct,
    cycle,
    edgeless,
    grid,
    hoffman_cocliques,
    path,
    petersen,
    prism,
    run_cli,
    spectrum,
    symplectic_complement,
    triangular,
)
from . import _srgddg

__all__ = [
    "Graph",
    "SrgddgError",
    "are_isomorphic",
    "certificate",
    "complete",
    "composition",
    "construct",
    "cycle",
    "decompose",
    "edgeless",
    "feasible",
    "grid",
    "hoffman_cocliques",
    "match_cases",
    "path",
    "petersen",
    "prism",
    "run_cli",
    "spectrum",
    "srg_params",
    "symplectic_complement",
    "triangular",
]


def srg_params(g):
    """(v, k, lambda, mu, r, s, f, g, c) as a dict, or None if g is not an SRG."""
    return json.loads(_srgddg._srg_params(g))


def decompose(g, all=True, budget=100_000_000):
    return json.loads(_srgddg._decompose(g, all, budget))


def match_cases(v, k, lam, mu):
    return json.loads(_srgddg._match_cases(v, k, lam, mu))


def feasible(s_min, s_max, n_max):
    return json.loads(_srgddg._feasible(s_min, s_max, n_max))
