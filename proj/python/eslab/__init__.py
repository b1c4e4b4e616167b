"""Exact checks of permutation and inversion-sequence statistic identities.

Reports come back as dicts with the same layout as the ``eslab`` CLI's JSON
output. Rationals are "p/q" strings.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BoundError, DomainError, Error, PoleError

__all__ = [
    "BoundError",
    "DomainError",
    "Error",
    "PoleError",
    "baselines",
    "claims",
    "conjecture",
    "distribution",
    "equidist",
    "formulas",
    "tbij_roundtrip",
    "verify",
    "version",
]

version = _core.version
formulas = _core.formulas
claims = _core.claims


def verify(id, caps=None, points=3, seed=1, at=None, js=None, n_max=None, workers=1, timing=True):
    """Verify one formula; ``at`` pins parameters, e.g. ``{"x": Fraction(1, 3)}``."""
    pinned = {k: str(Fraction(v)) for k, v in (at or {}).items()}
    return json.loads(
        _core.verify(id, caps or {}, points, seed, pinned, list(js or []), n_max, workers, timing)
    )


def distribution(n, stats, domain="perm"):
    """Joint distribution as {tuple string: int count}."""
    return {k: int(v) for k, v in _core.distribution(n, stats, domain).items()}


def equidist(claim, n_max=0, timing=True):
    return json.loads(_core.equidist(claim, n_max, timing))


def conjecture(n_max=9, timing=True):
    return json.loads(_core.conjecture(n_max, timing))


def tbij_roundtrip(n_max, timing=True):
    return json.loads(_core.tbij_roundtrip(n_max, timing))


def baselines(n_max=8, timing=True):
    return json.loads(_core.baselines(n_max, timing))
