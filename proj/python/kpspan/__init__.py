"""Sparse spanners of complete k-partite geometric graphs."""

import json

from ._kpspan import (
    InputError,
    Params,
    PointSet,
    derive_params,
    gen_lower_bound,
    gen_random,
    heuristic_params,
    read_points,
    wspd_pairs,
    write_points,
)
from . import _kpspan

__all__ = [
    "InputError",
    "Params",
    "PointSet",
    "build_spanner",
    "check_wspd",
    "derive_params",
    "exact_stretch",
    "gen_lower_bound",
    "gen_random",
    "heuristic_params",
    "point_set",
    "read_points",
    "wspd_pairs",
    "write_points",
]


def point_set(coords, colors):
    """Build a PointSet from any (n, d) array-like and n colours in 1..k."""
    if hasattr(coords, "tolist"):
        coords = coords.tolist()
    if hasattr(colors, "tolist"):
        colors = colors.tolist()
    return PointSet([list(map(float, p)) for p in coords], [int(c) for c in colors])


def build_spanner(points, alg="alg2", *, sep=None, eps=None, delta=1):
    """Returns (edges, report): edges as (i, j, weight, provenance) tuples, report as a dict."""
    edges, report = _kpspan.build_spanner(points, alg, sep, eps, delta)
    return edges, json.loads(report)


def exact_stretch(points, edges, threads=1):
    """Stretch report of the graph on `points` with the given (i, j, ...) edges."""
    pairs = [(int(e[0]), int(e[1])) for e in edges]
    return json.loads(_kpspan.exact_stretch(points, pairs, threads))


def check_wspd(points, s, singleton=False, cap=300):
    return json.loads(_kpspan.check_wspd(points, s, singleton, cap))
