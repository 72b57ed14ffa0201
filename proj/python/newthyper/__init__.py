"""Hypergeometric orthogonal polynomials over Newtonian bases.

Thin dict-based wrapper around the compiled ``_newthyper`` extension. All
scalar values are exact rationals serialized as strings ("p/q" or "p").
"""

import json as _json

try:
    from . import _newthyper as _core
except ImportError:  # in-tree builds put the extension on sys.path directly
    import _newthyper as _core

__all__ = ["construct", "verify", "classify", "moments", "validate"]


def _call(fn, spec, n):
    if not isinstance(spec, str):
        spec = _json.dumps(spec)
    return _json.loads(fn(spec, n))


def construct(spec, n=None):
    """Monic eigenpolynomials, expansion matrix and b/u/h tables."""
    return _call(_core.construct, spec, n)


def verify(spec, n=None):
    """Orthogonality conditions, Q recurrences, Gram oracle and duality."""
    return _call(_core.verify, spec, n)


def classify(spec, n=None):
    """Askey-tableau class label derived from lambda_n and a_n."""
    return _call(_core.classify, spec, n)


def moments(spec, n=None):
    """Generalized/reduced moment tables and Hankel determinants."""
    return _call(_core.moments, spec, n)


def validate(spec, n=None):
    """Structural validity report for an instance spec."""
    return _call(_core.validate, spec, n)
