"""Document formats: polyhedral complexes, tropical polynomials, valued
univariate polynomials, and integer matrices.

All documents are JSON.  Rationals are encoded as plain integers or
"p/q" strings so nothing is ever rounded.  A functional is the
coefficient array [c0, c1, ..., cn] standing for c0 + c1 x1 + ... +
cn xn, pinned to >= 0 ("ineq") or = 0 ("eq").  Cells may also be given
by generators ("vertices" / "rays" / "lineality"); when both forms are
present they must describe the same set.

Serialization is canonical: parsing then serializing a document
reproduces the serialized form byte for byte.
"""

from __future__ import annotations

import json

from .complexes import PolyhedralComplex
from .errors import InputError
from .maps import IntegerMatrix
from .polyhedra import AffineFunctional, Polyhedron, hull_from_generators
from .rational import RationalParseError, as_rat, rat_to_json
from .tropical import TropicalPolynomial, ValuedUnivariate

FORMAT_VERSION = "1"


class DocumentError(InputError):
    """Malformed document; the message carries the offending path."""


def _fail(path, message):
    raise DocumentError(f"{path}: {message}")


def _load(text, path="document"):
    if isinstance(text, (dict, list)):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(path, f"invalid JSON ({exc.msg} at line {exc.lineno})")


def _expect_keys(obj, path, required, optional=()):
    if not isinstance(obj, dict):
        _fail(path, "expected an object")
    for key in required:
        if key not in obj:
            _fail(path, f"missing field {key!r}")
    for key in obj:
        if key not in required and key not in optional:
            _fail(path, f"unknown field {key!r}")


def _rat(value, path):
    try:
        return as_rat(value)
    except RationalParseError as exc:
        _fail(path, str(exc))


def _rat_vector(values, path, arity=None):
    if not isinstance(values, list):
        _fail(path, "expected an array of rationals")
    if arity is not None and len(values) != arity:
        _fail(path, f"expected {arity} entries, got {len(values)}")
    return tuple(_rat(v, f"{path}[{k}]") for k, v in enumerate(values))


def _functional(values, path, ambient_dim):
    row = _rat_vector(values, path, ambient_dim + 1)
    return AffineFunctional(row[1:], row[0])


# -- complexes ---------------------------------------------------------------


def parse_complex(text) -> PolyhedralComplex:
    doc = _load(text)
    _expect_keys(doc, "document", ("format_version", "ambient_dim", "cells"))
    if doc["format_version"] != FORMAT_VERSION:
        _fail("document.format_version", f"unsupported version {doc['format_version']!r}")
    n = doc["ambient_dim"]
    if not isinstance(n, int) or n < 0:
        _fail("document.ambient_dim", "must be a nonnegative integer")
    if not isinstance(doc["cells"], list):
        _fail("document.cells", "expected an array")
    cells = []
    for k, record in enumerate(doc["cells"]):
        cells.append(_parse_cell(record, f"document.cells[{k}]", n))
    return PolyhedralComplex(n, cells)


def _parse_cell(record, path, n):
    _expect_keys(record, path, (), ("ineq", "eq", "vertices", "rays", "lineality"))
    has_h = "ineq" in record or "eq" in record
    has_v = "vertices" in record or "rays" in record or "lineality" in record
    if not has_h and not has_v:
        _fail(path, "cell needs constraints or generators")
    h_poly = v_poly = None
    if has_h:
        ineqs = [
            _functional(row, f"{path}.ineq[{k}]", n)
            for k, row in enumerate(record.get("ineq", []))
        ]
        eqs = [
            _functional(row, f"{path}.eq[{k}]", n)
            for k, row in enumerate(record.get("eq", []))
        ]
        h_poly = Polyhedron(n, eqs, ineqs)
    if has_v:
        vertices = [
            _rat_vector(v, f"{path}.vertices[{k}]", n)
            for k, v in enumerate(record.get("vertices", []))
        ]
        rays = [
            _rat_vector(v, f"{path}.rays[{k}]", n)
            for k, v in enumerate(record.get("rays", []))
        ]
        lineality = [
            _rat_vector(v, f"{path}.lineality[{k}]", n)
            for k, v in enumerate(record.get("lineality", []))
        ]
        if not vertices and not rays and not lineality:
            _fail(path, "generator form needs at least one generator")
        v_poly = hull_from_generators(vertices, rays, lineality, ambient_dim=n)
    if h_poly is not None and v_poly is not None:
        if not h_poly.same_support(v_poly):
            _fail(path, "constraint and generator forms describe different sets")
        return h_poly
    return h_poly if h_poly is not None else v_poly


def complex_to_dict(complex_: PolyhedralComplex) -> dict:
    cells = []
    for cell in complex_.cells:
        cells.append(
            {
                "eq": [_functional_to_json(f) for f in cell.equalities],
                "ineq": [_functional_to_json(f) for f in cell.inequalities],
            }
        )
    return {
        "format_version": FORMAT_VERSION,
        "ambient_dim": complex_.ambient_dim,
        "cells": cells,
    }


def _functional_to_json(f: AffineFunctional):
    return [rat_to_json(f.offset)] + [rat_to_json(c) for c in f.normal]


def serialize_complex(complex_: PolyhedralComplex) -> str:
    return json.dumps(complex_to_dict(complex_), indent=2) + "\n"


# -- tropical polynomials ----------------------------------------------------


def parse_tropical_polynomial(text) -> TropicalPolynomial:
    doc = _load(text)
    _expect_keys(doc, "document", ("ambient_dim", "terms"))
    n = doc["ambient_dim"]
    if not isinstance(n, int) or n < 1:
        _fail("document.ambient_dim", "must be a positive integer")
    if not isinstance(doc["terms"], list) or not doc["terms"]:
        _fail("document.terms", "expected a nonempty array")
    terms = []
    for k, term in enumerate(doc["terms"]):
        path = f"document.terms[{k}]"
        _expect_keys(term, path, ("exponent", "valuation"))
        exponent = term["exponent"]
        if not isinstance(exponent, list) or len(exponent) != n:
            _fail(f"{path}.exponent", f"expected an array of {n} integers")
        if not all(isinstance(e, int) for e in exponent):
            _fail(f"{path}.exponent", "entries must be integers")
        terms.append((tuple(exponent), _rat(term["valuation"], f"{path}.valuation")))
    try:
        return TropicalPolynomial.from_terms(n, terms)
    except InputError as exc:
        _fail("document.terms", str(exc))


def parse_univariate(text) -> ValuedUnivariate:
    doc = _load(text)
    _expect_keys(doc, "document", ("terms",), ("ambient_dim",))
    if doc.get("ambient_dim", 1) != 1:
        _fail("document.ambient_dim", "a valued univariate lives in one variable")
    if not isinstance(doc["terms"], list) or not doc["terms"]:
        _fail("document.terms", "expected a nonempty array")
    pairs = []
    for k, term in enumerate(doc["terms"]):
        path = f"document.terms[{k}]"
        _expect_keys(term, path, ("exponent", "valuation"))
        exponent = term["exponent"]
        if isinstance(exponent, list):
            if len(exponent) != 1 or not isinstance(exponent[0], int):
                _fail(f"{path}.exponent", "expected an integer")
            exponent = exponent[0]
        if not isinstance(exponent, int) or exponent < 0:
            _fail(f"{path}.exponent", "expected a nonnegative integer")
        pairs.append((exponent, _rat(term["valuation"], f"{path}.valuation")))
    try:
        return ValuedUnivariate.from_pairs(pairs)
    except InputError as exc:
        _fail("document.terms", str(exc))


# -- matrices and vectors ----------------------------------------------------


def parse_matrix(text) -> IntegerMatrix:
    doc = _load(text)
    _expect_keys(doc, "document", ("rows", "cols", "entries"))
    rows, cols = doc["rows"], doc["cols"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        _fail("document", "rows and cols must be positive integers")
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != rows:
        _fail("document.entries", f"expected {rows} rows")
    for k, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            _fail(f"document.entries[{k}]", f"expected {cols} entries")
        if not all(isinstance(x, int) for x in row):
            _fail(f"document.entries[{k}]", "entries must be integers")
    return IntegerMatrix.from_rows(entries)


def matrix_to_dict(matrix: IntegerMatrix) -> dict:
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [list(row) for row in matrix.entries],
    }


def serialize_matrix(matrix: IntegerMatrix) -> str:
    return json.dumps(matrix_to_dict(matrix), indent=2) + "\n"


def parse_vector(text, arity=None):
    """Comma-separated rationals, e.g. '1,2,3/2,-4'."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise InputError("empty vector")
    try:
        vec = tuple(as_rat(p) for p in parts)
    except RationalParseError as exc:
        raise InputError(str(exc)) from None
    if arity is not None and len(vec) != arity:
        raise InputError(f"expected {arity} coordinates, got {len(vec)}")
    return vec
