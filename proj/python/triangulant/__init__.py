"""Exact triangulant computations for matrix pairs.

Thin dict-level wrapper around the compiled _triangulant module. Matrices are
plain dicts: {"field": {"kind": ...}, "rows": n, "cols": n, "entries": [[str]]}.
"""

import json as _json

from _triangulant import FieldError  # noqa: F401
import _triangulant as _core

__all__ = [
    "FieldError",
    "matrix",
    "triangulant",
    "triangulant_k",
    "spectrum",
    "oracle",
    "mub_certify",
    "mub_construct",
    "selftest",
]


def matrix(entries, kind="rational", p=None, tol=None):
    """Build a matrix dict from a nested list of entry strings or ints."""
    field = {"kind": kind}
    if p is not None:
        field["p"] = p
    if tol is not None:
        field["tol"] = tol
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    return {
        "field": field,
        "rows": rows,
        "cols": cols,
        "entries": [[str(e) for e in row] for row in entries],
    }


def triangulant(a, b, diagnostics=False):
    return _json.loads(_core.triangulant(_json.dumps(a), _json.dumps(b), diagnostics))


def triangulant_k(a, b, k, seed=20240915, force_interpolation=False):
    return _json.loads(
        _core.triangulant_k(_json.dumps(a), _json.dumps(b), k, seed, force_interpolation)
    )


def spectrum(a):
    return _json.loads(_core.spectrum(_json.dumps(a)))


def oracle(a, b, k):
    return _json.loads(_core.oracle(_json.dumps(a), _json.dumps(b), k))


def mub_certify(bases, tol=1e-8):
    return _json.loads(_core.mub_certify(_json.dumps(bases), tol))


def mub_construct(p):
    return _json.loads(_core.mub_construct(p))


def selftest(seed=20240915, full=False):
    return _json.loads(_core.selftest(seed, full))
