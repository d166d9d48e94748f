"""Norms, numerical radii and index bounds of homogeneous polynomials between
finite-dimensional l_p spaces.

Polynomials and results are plain dicts in the same JSON layout the
``polyrad`` command-line tool reads and writes.
"""

import json

from . import _core
from ._core import ComputationError, InputError, PreconditionError

__all__ = [
    "ComputationError",
    "InputError",
    "PreconditionError",
    "case_names",
    "index_upper_bound",
    "load_poly",
    "numerical_radius",
    "poly_norm",
    "range_cloud",
    "run_case",
    "v_delta",
]


def _text(obj):
    if obj is None:
        return ""
    return obj if isinstance(obj, str) else json.dumps(obj)


def load_poly(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def poly_norm(p, config=None):
    return json.loads(_core.poly_norm(_text(p), _text(config)))


def numerical_radius(p, q, method="attain", config=None):
    """method: "attain", "ladder" (attainment plus the delta ladder) or "limit"."""
    return json.loads(_core.numerical_radius(_text(p), _text(q), method, _text(config)))


def v_delta(p, q, delta, config=None):
    return json.loads(_core.v_delta(_text(p), _text(q), delta, _text(config)))


def range_cloud(p, q, delta, count=200, seed=1, config=None):
    return json.loads(
        _core.range_cloud(_text(p), _text(q), delta, count, seed, _text(config))
    )


def index_upper_bound(q, samples=20, seed=1, config=None):
    return json.loads(_core.index_upper_bound(_text(q), samples, seed, _text(config)))


def run_case(name):
    return json.loads(_core.run_case(name))


def case_names():
    return list(_core.case_names())
