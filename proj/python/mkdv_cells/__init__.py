"""Exact A(2)_2n mKdV cells, Miura opers and flows.

Rationals travel as "p/q" strings; helpers convert them to Fractions.
"""

import json
from fractions import Fraction

from . import _core
from ._core import Error, IdentityViolation, PreconditionError, SchemaError, admissible_flow

__all__ = [
    "Error",
    "IdentityViolation",
    "PreconditionError",
    "SchemaError",
    "admissible_flow",
    "export_document",
    "fraction",
    "generate",
    "polynomial",
    "read_document",
    "sample_parameters",
    "verify",
]


def fraction(text):
    """Fraction from a "p/q" string."""
    return Fraction(text)


def polynomial(coeffs):
    """Fractions of a coefficient list, lowest degree first."""
    return [Fraction(c) for c in coeffs]


def _rats(values):
    return [str(Fraction(v)) for v in values]


def sample_parameters(seed, count):
    return [Fraction(q) for q in _core.sample_parameters(seed, count)]


def generate(n, J, c):
    """Report of the generated tuple, its degrees, epsilons and oper."""
    return json.loads(_core.generate(n, list(J), _rats(c)))


def verify(n, J, c, r, depth=None):
    """Report of flows, tangency, untwisted/twisted agreement and Miura/KdV compatibility."""
    return json.loads(_core.verify(n, list(J), _rats(c), list(r), depth))


def export_document(data, kind):
    return _core.export_document(json.dumps(data), kind)


def read_document(text):
    """(kind, data) of a validated document; raises SchemaError otherwise."""
    kind, data = _core.read_document(text)
    return kind, json.loads(data)
