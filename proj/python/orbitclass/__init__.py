"""Exact equivariant classes of matrix and torus orbit closures.

The compiled core speaks JSON strings so that exact integers cross the
boundary untruncated; this wrapper accepts and returns plain Python
structures (dicts, lists, ints) instead.
"""

import json

from orbitclass import _core

__version__ = _core.__version__

__all__ = [
    "column_matroid",
    "localization",
    "full_tuple",
    "gkm_violations",
    "uniform_class",
    "schur_rendering",
    "lift_tuple",
    "expand_tuple",
    "expand_class",
    "degree",
    "klyachko_coefficient",
    "cauchy_check",
]


def _dump(value):
    """Accept either an already-serialized JSON string or a structure."""
    return value if isinstance(value, str) else json.dumps(value)


def matrix(entries):
    """Matrix document from a list of rows of ints, fractions, or 'p/q' strings."""
    rows = [[str(x) for x in row] for row in entries]
    return {"rows": len(rows), "cols": len(rows[0]) if rows else 0, "entries": rows}


def column_matroid(matrix_doc):
    return json.loads(_core.column_matroid(_dump(matrix_doc)))


def localization(matrix_or_matroid, basis):
    return json.loads(_core.localization(_dump(matrix_or_matroid), list(basis)))


def full_tuple(matrix_or_matroid):
    return json.loads(_core.full_tuple(_dump(matrix_or_matroid)))


def gkm_violations(tuple_doc):
    return json.loads(_core.gkm_violations(_dump(tuple_doc)))


def uniform_class(r, n, form="lr"):
    return json.loads(_core.uniform_class(r, n, form))


def schur_rendering(poly_doc):
    return _core.schur_rendering(_dump(poly_doc))


def lift_tuple(tuple_doc):
    return json.loads(_core.lift_tuple(_dump(tuple_doc)))


def expand_tuple(tuple_doc):
    return json.loads(_core.expand_tuple(_dump(tuple_doc)))


def expand_class(poly_doc):
    return json.loads(_core.expand_class(_dump(poly_doc)))


def degree(r, n):
    return int(_core.degree(r, n))


def klyachko_coefficient(lam, r, n, start_index=0):
    return int(_core.klyachko_coefficient(list(lam), r, n, start_index))


def cauchy_check(size_t_alphabet, size_v_alphabet):
    return _core.cauchy_check(size_t_alphabet, size_v_alphabet)
