"""Exact generalized associahedra and their folded sections.

Thin dictionary-returning wrappers around the C++ extension module; the
underlying functions produce canonical JSON strings.
"""

import json

from ._assocfold import DEFAULT_SEED, __version__, knit_grid, off
from ._assocfold import build as _build
from ._assocfold import fold as _fold
from ._assocfold import list_types as _list_types
from ._assocfold import verify as _verify

__all__ = [
    "DEFAULT_SEED",
    "__version__",
    "build",
    "fold",
    "knit_grid",
    "list_types",
    "off",
    "verify",
]


def list_types():
    """Supported types with Coxeter data and vertex counts."""
    return json.loads(_list_types())["types"]


def build(type, c="1", seed=DEFAULT_SEED, deep=False):
    """Polytope artifact for a type (ambient, or folded when multiply laced)."""
    return json.loads(_build(type, c, seed, deep))


def fold(target, source="", c="1", seed=DEFAULT_SEED, deep=False):
    """Folded section artifact (polytope plus normal fan) for a target type."""
    return json.loads(_fold(target, source, c, seed, deep))


def verify(target, source="", c="1", seed=DEFAULT_SEED, deep=False):
    """Verification report for a folding, one pass/fail entry per check."""
    return json.loads(_verify(target, source, c, seed, deep))
