"""Python bindings for the spectral_perturb C++ library."""

import json as _json

from ._core import (
    InputError,
    NumericalError,
    algebraic_connectivity,
    connectivity_lower_from_complement,
    jacobi_eigen,
    lili_two_sided,
    mathias_arrowhead,
    opnorm_bounds,
    secular_largest,
    secular_smallest,
    smallest_nonzero_lower,
    weyl_arrowhead,
)
from . import _core


def _rows(m):
    return [list(map(float, r)) for r in m]


def analyze_spec(m, a, c):
    """Every bound on the bordered matrix [[c, a^t], [a, m]] with exact values."""
    return _json.loads(_core.analyze_spec_json(_rows(m), list(map(float, a)), float(c)))


def analyze_rank_one(m, x):
    return _json.loads(_core.analyze_rank_one_json(_rows(m), list(map(float, x))))


def edge_deletion(n, edges, u, v):
    return _json.loads(_core.edge_deletion_json(n, [tuple(e) for e in edges], u, v))


def pinning(n, edges, pinned, **kwargs):
    return _json.loads(_core.pinning_json(n, [tuple(e) for e in edges], list(pinned), **kwargs))


def cross_gram_tail(ensemble, n, p, **kwargs):
    return _json.loads(_core.cross_gram_tail_json(ensemble, n, p, **kwargs))


def verify(seed=1, trials=100, dim=6, inject_fault=False):
    return _json.loads(_core.verify_json(seed, trials, dim, inject_fault))
