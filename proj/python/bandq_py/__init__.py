"""Quiver presentations of integral band algebras.

Thin JSON-over-pybind wrapper: each call takes a constructor spec string
(``"b5"``, ``"signs:2"``, ``"rect:2x3"``, ``"prod(chain:2,chain:2)"``, or a
path to a JSON multiplication table) and returns parsed report data.
"""

import json as _json

from . import _core
from ._core import BandError, quiver_dot

__all__ = ["analyze", "present", "verify", "cw", "quiver_dot", "BandError"]


def analyze(spec):
    return _json.loads(_core.analyze(spec))


def present(spec, force_generic=False, truncation_override=-1):
    return _json.loads(_core.present(spec, force_generic, truncation_override))


def verify(spec, force_generic=False):
    return _json.loads(_core.verify(spec, force_generic))


def cw(spec):
    return _json.loads(_core.cw(spec))
