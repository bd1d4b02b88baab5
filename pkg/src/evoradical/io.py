"""Algebra documents (JSON) and DOT rendering.

A document looks like::

    {"dim": 3,
     "labels": ["e1", "e2", "e3"],          # optional
     "matrix": [["0", "0", "0"], ["1", "0", "0"], ["0", "-2/3", "0"]]}

Entries are rational literals given as strings (integers are tolerated);
JSON floats are rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Sequence

from .algebra import EvolutionAlgebra
from .digraph import DiGraph
from .errors import ParseError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(literal, where: str | None = None) -> Fraction:
    if isinstance(literal, bool) or not isinstance(literal, (str, int)):
        raise ParseError(f"bad rational literal {literal!r}: expected a string such as \"-2/3\"", where)
    if isinstance(literal, int):
        return Fraction(literal)
    m = _RATIONAL.match(literal)
    if not m:
        raise ParseError(f"bad rational literal {literal!r}", where)
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"bad rational literal {literal!r}: zero denominator", where)
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_algebra(text: str) -> EvolutionAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return algebra_from_document(doc)


def algebra_from_document(doc) -> EvolutionAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", "$")
    unknown = set(doc) - {"dim", "labels", "matrix"}
    if unknown:
        raise ParseError(f"unknown field(s) {sorted(unknown)}", "$")
    if "matrix" not in doc:
        raise ParseError("missing field", "matrix")
    matrix = doc["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise ParseError("must be a list of rows", "matrix")
    dim = doc.get("dim", len(matrix))
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"must be a positive integer, got {dim!r}", "dim")
    if len(matrix) != dim:
        raise ParseError(f"matrix is not square: {len(matrix)} rows for dim {dim}", "matrix")
    rows = []
    for i, row in enumerate(matrix):
        if len(row) != dim:
            raise ParseError(f"matrix is not square: {len(row)} entries, expected {dim}", f"matrix[{i}]")
        rows.append(tuple(parse_rational(w, f"matrix[{i}][{k}]") for k, w in enumerate(row)))
    labels = doc.get("labels")
    if labels is None:
        labels = ()
    else:
        if not isinstance(labels, list) or not all(isinstance(s, str) and s for s in labels):
            raise ParseError("must be a list of non-empty strings", "labels")
        if len(labels) != dim:
            raise ParseError(f"expected {dim} labels, got {len(labels)}", "labels")
        seen = set()
        for idx, s in enumerate(labels):
            if s in seen:
                raise ParseError(f"duplicate label {s!r}", f"labels[{idx}]")
            seen.add(s)
    return EvolutionAlgebra(tuple(rows), tuple(labels))


def algebra_to_document(alg: EvolutionAlgebra) -> dict:
    return {
        "dim": alg.dim,
        "labels": list(alg.labels),
        "matrix": [[format_rational(w) for w in row] for row in alg.matrix],
    }


def serialize_algebra(alg: EvolutionAlgebra) -> str:
    return json.dumps(algebra_to_document(alg), indent=2)


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: DiGraph, labels: Sequence[str], name: str = "G") -> str:
    """Graphviz digraph text: nodes in index order, edges row-major."""
    if len(labels) != g.n:
        raise ValueError(f"expected {g.n} labels, got {len(labels)}")
    lines = [f"digraph {_dot_id(name)} {{"]
    lines += [f"  {_dot_id(s)};" for s in labels]
    lines += [f"  {_dot_id(labels[u])} -> {_dot_id(labels[v])};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_index_list(spec: str, labels: Sequence[str]) -> frozenset[int]:
    """Resolve ``"e1,e3"`` or ``"1,3"`` (1-based) to 0-based indices; labels win over numbers."""
    lookup = {s: i for i, s in enumerate(labels)}
    out = set()
    for token in (t.strip() for t in spec.split(",")):
        if not token:
            continue
        if token in lookup:
            out.add(lookup[token])
        elif token.isdigit() and 1 <= int(token) <= len(labels):
            out.add(int(token) - 1)
        else:
            raise ParseError(f"unknown basis element {token!r}", "--ideal")
    return frozenset(out)
