"""JSON documents for roots, root systems and embedding results.

Rationals are written as strings (``"-2/3"``) so documents stay exact.  The
embedding document carries a ``schema``/``version`` pair; see the README for
the layout.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .rootsystem import RootSystem, build_root_system
from .weyl import WeylMatrixOperator, WeylOperator, term_sort_key

SCHEMA = "lieweyl/embedding"
VERSION = 1


def rational_to_str(c) -> str:
    return str(Fraction(c))


def rational_from_str(s) -> Fraction:
    return Fraction(s)


# -- roots ----------------------------------------------------------------------

def root_to_json(rs: RootSystem, root) -> dict:
    root = tuple(root)
    if not rs.is_root(root):
        raise ValueError(f"{root} is not a root of {rs.type}")
    return {"type": str(rs.type), "coords": list(root)}


def root_from_json(doc: dict):
    """Return ``(root_system, coords)``; rejects coordinates that are not roots."""
    rs = build_root_system(doc["type"])
    root = tuple(int(c) for c in doc["coords"])
    if not rs.is_root(root):
        raise ValueError(f"{root} is not a root of {rs.type}")
    return rs, root


def root_system_to_json(rs: RootSystem) -> dict:
    return rs.to_dict()


def root_system_from_json(doc: dict) -> RootSystem:
    rs = build_root_system(doc["type"])
    listed = [tuple(r) for r in doc.get("positive_roots", rs.positive_roots)]
    if listed != list(rs.positive_roots):
        raise ValueError("positive roots do not match the regenerated root system")
    return rs


# -- operators ------------------------------------------------------------------

def weyl_to_json(op: WeylOperator) -> list:
    return [
        {"coeff": rational_to_str(op.terms[key]), "x": list(key[0]), "d": list(key[1])}
        for key in sorted(op.terms, key=term_sort_key)
    ]


def weyl_from_json(n: int, terms: list) -> WeylOperator:
    out = {}
    for t in terms:
        key = (tuple(t["x"]), tuple(t["d"]))
        if len(key[0]) != n or len(key[1]) != n:
            raise ValueError("exponent vector has the wrong length")
        out[key] = rational_from_str(t["coeff"])
    return WeylOperator(n, out)


def operator_to_json(op: WeylMatrixOperator) -> list:
    return [
        {"row": i, "col": j, "terms": weyl_to_json(op.entries[(i, j)])}
        for (i, j) in sorted(op.entries)
    ]


def operator_from_json(n: int, dim: int, entries: list) -> WeylMatrixOperator:
    return WeylMatrixOperator(n, dim, {
        (e["row"], e["col"]): weyl_from_json(n, e["terms"]) for e in entries
    })


def embedding_to_json(result, generators=None) -> dict:
    """Structured document for an :class:`~lieweyl.embedding.EmbeddingResult`."""
    from .embedding import simple_generator_order

    alg, par, module = result.algebra, result.parabolic, result.module
    gens = generators if generators is not None else simple_generator_order(alg)
    return {
        "schema": SCHEMA,
        "version": VERSION,
        "type": result.type,
        "crossed": [int(c) for c in par.crossed],
        "lambda": [rational_to_str(c) for c in module.highest_weight],
        "n": par.n,
        "variables": [
            {"name": f"x_{{{k + 1}}}", "generator": alg.name(g), "root": list(par.weights[k])}
            for k, g in enumerate(par.generators)
        ],
        "module": {
            "dim": module.dim,
            "basis_weights": [[rational_to_str(c) for c in w] for w in module.basis_weights],
        },
        "images": [
            {"generator": alg.name(g), "entries": operator_to_json(result.image(g))}
            for g in gens
        ],
        "op_counts": dict(result.op_counts),
    }


def embedding_from_json(doc: dict) -> dict:
    """Reload the images as ``{generator name: WeylMatrixOperator}``."""
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unknown schema {doc.get('schema')!r}")
    if doc.get("version") != VERSION:
        raise ValueError(f"unsupported version {doc.get('version')!r}")
    n, dim = doc["n"], doc["module"]["dim"]
    return {img["generator"]: operator_from_json(n, dim, img["entries"]) for img in doc["images"]}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
