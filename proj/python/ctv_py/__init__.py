"""Exact colorful Tverberg partitions and transversals.

Instances and certificates cross the boundary as JSON text in the same format the
`ctv` command-line tool uses; the helpers below also accept and return dicts.
"""

import json

from . import _core
from ._core import CtvError, chessboard_betti, chessboard_f_vector

__all__ = [
    "CtvError",
    "chessboard_betti",
    "chessboard_f_vector",
    "partition",
    "random_instance",
    "render_svg",
    "test_map_degree",
    "tightness_instance",
    "transversal",
    "verify",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _loads(text):
    return None if text is None else json.loads(text)


def random_instance(d, k, r, seed=0):
    return json.loads(_core.random_instance(d, k, list(r), seed))


def tightness_instance(d, k, r, oversized=0):
    return json.loads(_core.tightness_instance(d, k, list(r), oversized))


def partition(instance):
    """Certificate dict for a k = 0 instance, or None if no colorful partition exists."""
    return _loads(_core.partition(_text(instance)))


def transversal(instance, samples=10000, refine=6, seed=0, exact=False):
    """Certificate dict, or None. Without `exact`, None only means the budget ran out."""
    return _loads(_core.transversal(_text(instance), samples, refine, seed, exact))


def verify(instance, certificate):
    """(ok, reason) from the exact verifier."""
    return _core.verify(_text(instance), _text(certificate))


def test_map_degree(r, d):
    return json.loads(_core.test_map_degree(r, d))


def render_svg(instance, certificate=None):
    return _core.render_svg(_text(instance), None if certificate is None else _text(certificate))
