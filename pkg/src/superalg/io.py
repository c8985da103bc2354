"""Canonical JSON serialization (.lsa.json, format_version 1).

Strict on input: unknown fields, non-canonical rationals ("2/4", "1/1",
"-0"), unsorted or malformed tables, and any type-invariant violation
are rejected rather than repaired, so golden files stay byte-stable.

Layout of a document:

    {
      "format_version": 1,
      "algebra": {"kind": "lie" | "associative",
                  "labels": [...], "parities": ["even" | "odd", ...],
                  "table": {"i,j": {"k": "p/q", ...}, ...}},
      "forms": {name: {"parity": ..., "matrix": [[...], ...]}, ...},
      "maps":  {name: {"degree": ..., "matrix": [[...], ...]}, ...},
      "metadata": {...}
    }

Rationals are strings "p" or "p/q" in lowest terms with q > 1; a lie
table stores only index pairs i <= j, row-major matrices are dense.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import EVEN, ODD, GradedBasis, LieSuperalgebra, algebra, basis
from .constructions import AssocSuperalgebra, assoc_algebra
from .errors import InvariantViolation, ParseError
from .forms import BilinearForm, parity_pattern_ok
from .maps import LinearMap, degree_pattern_ok

FORMAT_VERSION = 1
FILE_EXTENSION = ".lsa.json"

_RAT = re.compile(r"^(0|-?[1-9][0-9]*)(/([1-9][0-9]*))?$")


@dataclass
class Document:
    algebra: object  # LieSuperalgebra | AssocSuperalgebra
    forms: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)
    format_version: int = FORMAT_VERSION

    def __eq__(self, other):
        return (
            isinstance(other, Document)
            and self.format_version == other.format_version
            and self.algebra == other.algebra
            and self.forms == other.forms
            and self.maps == other.maps
            and self.metadata == other.metadata
        )


def rat_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s):
    if not isinstance(s, str) or not _RAT.match(s):
        raise ParseError(f"malformed rational {s!r}")
    x = Fraction(s)
    if rat_str(x) != s:
        raise ParseError(f"non-canonical rational {s!r}")
    return x


def _parity_name(p):
    return "even" if p == EVEN else "odd"


def _parity_value(s, what):
    if s == "even":
        return EVEN
    if s == "odd":
        return ODD
    raise ParseError(f"{what} must be 'even' or 'odd', got {s!r}")


def _algebra_payload(alg):
    kind = "associative" if isinstance(alg, AssocSuperalgebra) else "lie"
    table = {}
    for (i, j), row in alg.table:
        table[f"{i},{j}"] = {str(k): rat_str(c) for k, c in row}
    return {
        "kind": kind,
        "labels": list(alg.basis.labels),
        "parities": [_parity_name(p) for p in alg.basis.parities],
        "table": dict(sorted(table.items(), key=_table_key)),
    }


def _table_key(kv):
    i, j = kv[0].split(",")
    return (int(i), int(j))


def _form_payload(f):
    return {
        "parity": _parity_name(f.parity),
        "matrix": [[rat_str(c) for c in row] for row in f.matrix],
    }


def _map_payload(m):
    return {
        "degree": _parity_name(m.degree),
        "matrix": [[rat_str(c) for c in row] for row in m.matrix],
    }


def save(doc):
    """Serialize a Document to canonical UTF-8 JSON bytes."""
    payload = {
        "format_version": doc.format_version,
        "algebra": _algebra_payload(doc.algebra),
        "forms": {n: _form_payload(f) for n, f in sorted(doc.forms.items())},
        "maps": {n: _map_payload(m) for n, m in sorted(doc.maps.items())},
        "metadata": {k: doc.metadata[k] for k in sorted(doc.metadata)},
    }
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _expect_keys(obj, keys, what):
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be an object")
    extra = set(obj) - set(keys)
    if extra:
        raise ParseError(f"{what} has unknown fields {sorted(extra)}")
    missing = set(keys) - set(obj)
    if missing:
        raise ParseError(f"{what} is missing fields {sorted(missing)}")


def _parse_matrix(rows, n, what):
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"{what} must be a {n}x{n} matrix")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{what} must be a {n}x{n} matrix")
        out.append(tuple(parse_rat(c) for c in row))
    return tuple(out)


def _parse_algebra(payload):
    _expect_keys(payload, ("kind", "labels", "parities", "table"), "algebra")
    kind = payload["kind"]
    if kind not in ("lie", "associative"):
        raise ParseError(f"unknown algebra kind {payload['kind']!r}")
    labels = payload["labels"]
    parities = payload["parities"]
    if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
        raise ParseError("labels must be a list of strings")
    if not isinstance(parities, list) or len(parities) != len(labels):
        raise ParseError("parities must match labels")
    pvals = [_parity_value(p, "parity") for p in parities]
    try:
        b = basis(list(zip(labels, pvals)))
    except InvariantViolation:
        raise
    n = b.dim
    table = payload["table"]
    if not isinstance(table, dict):
        raise ParseError("table must be an object")
    entries = {}
    for key, row in table.items():
        m = re.match(r"^(\d+),(\d+)$", key)
        if not m:
            raise ParseError(f"bad table key {key!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"table key {key!r} out of range")
        if kind == "lie" and i > j:
            raise ParseError(f"lie table key {key!r} must have i <= j")
        if not isinstance(row, dict) or not row:
            raise ParseError(f"table entry {key!r} must be a nonempty object")
        sparse = {}
        for ks, cs in row.items():
            if not re.match(r"^\d+$", ks):
                raise ParseError(f"bad coefficient index {ks!r}")
            k = int(ks)
            if not 0 <= k < n:
                raise ParseError(f"coefficient index {ks!r} out of range")
            c = parse_rat(cs)
            if c == 0:
                raise ParseError(f"zero coefficient stored at {key!r}:{ks!r}")
            sparse[k] = c
        entries[(i, j)] = sparse
    if kind == "lie":
        return algebra(b, entries)
    return assoc_algebra(b, entries)


def load(data):
    """Parse canonical JSON bytes into a Document, validating every type
    invariant (basis ordering, parity additivity, parity patterns)."""
    if isinstance(data, bytes):
        text = data.decode("utf-8")
    else:
        text = data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError(ex.msg, line=ex.lineno) from None
    _expect_keys(
        payload, ("format_version", "algebra", "forms", "maps", "metadata"), "document"
    )
    if payload["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {payload['format_version']!r}")
    alg = _parse_algebra(payload["algebra"])
    n = alg.basis.dim
    forms = {}
    if not isinstance(payload["forms"], dict):
        raise ParseError("forms must be an object")
    for name, fpay in payload["forms"].items():
        _expect_keys(fpay, ("parity", "matrix"), f"form {name!r}")
        parity = _parity_value(fpay["parity"], f"form {name!r} parity")
        matrix = _parse_matrix(fpay["matrix"], n, f"form {name!r} matrix")
        f = BilinearForm(matrix, parity)
        if not parity_pattern_ok(alg.basis, f):
            raise InvariantViolation(
                "form-parity", f"form {name!r} contradicts its declared parity"
            )
        forms[name] = f
    maps = {}
    if not isinstance(payload["maps"], dict):
        raise ParseError("maps must be an object")
    for name, mpay in payload["maps"].items():
        _expect_keys(mpay, ("degree", "matrix"), f"map {name!r}")
        degree = _parity_value(mpay["degree"], f"map {name!r} degree")
        matrix = _parse_matrix(mpay["matrix"], n, f"map {name!r} matrix")
        m = LinearMap(matrix, degree)
        if not degree_pattern_ok(alg.basis, m):
            raise InvariantViolation(
                "map-degree", f"map {name!r} contradicts its declared degree"
            )
        maps[name] = m
    if not isinstance(payload["metadata"], dict):
        raise ParseError("metadata must be an object")
    return Document(alg, forms, maps, payload["metadata"])


def document_for_entry(entry):
    """Wrap a catalog entry as a Document."""
    meta = {"name": entry.name}
    if entry.n is not None:
        meta["n"] = entry.n
    return Document(
        entry.algebra if entry.algebra is not None else entry.assoc,
        dict(entry.forms),
        dict(entry.maps),
        meta,
    )
