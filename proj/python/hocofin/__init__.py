"""Homology of group diagrams over finite categories."""

import json

from ._core import (
    HocofinError,
    ab_colim_derived,
    fingerprint,
    fixture_names,
    theorem_names,
)
from . import _core

__all__ = [
    "HocofinError",
    "ab_colim_derived",
    "certify_cofinal",
    "certify_contractible",
    "colim0",
    "error_code",
    "fingerprint",
    "fixture_names",
    "fixtures",
    "invariant_factors",
    "load_workspace",
    "theorem_names",
    "verify",
]


def error_code(exc):
    """Machine-readable code of a HocofinError, e.g. "MissingComposite"."""
    return str(exc).split(":", 1)[0]


def fixtures():
    return json.loads(_core.fixtures_json())


def verify(theorem, fixture, n_max=3, effort=1, level=3, unconditional=False):
    """Report dict; report["exit_code"] is 0 agree, 2 disagree, 3 not certified."""
    return json.loads(_core.verify_json(theorem, fixture, n_max, effort, level, unconditional))


def colim0(diagram, input=""):
    return json.loads(_core.colim0_json(diagram, input))


def certify_cofinal(functor, coinitial=False, effort=1, n_max=3, input=""):
    return json.loads(_core.certify_cofinal_json(functor, coinitial, effort, n_max, input))


def certify_contractible(category, effort=1, n_max=3, input=""):
    return json.loads(_core.certify_contractible_json(category, effort, n_max, input))


def invariant_factors(rows):
    return [int(d) for d in _core.invariant_factors(rows)]


def load_workspace(path):
    return json.loads(_core.workspace_summary_json(path))
