"""Interchange documents: JSON with canonical rational strings.

Rationals travel as strings "p" or "p/q" with q > 0 and gcd(|p|, q) = 1;
negative values carry a leading '-' and there is never a '+'.  Parsing
accepts any valid integer ratio (e.g. "2/4") and canonicalizes on write, so
serialize(parse(doc)) is the canonical form and round-trips bit-exactly on
already canonical documents.

Document kinds:

* ``algebra``   : dims + d/b00/b01/jac tensors (and optional metadata);
* ``morphism``  : source/target (inline algebra or file path), phi0/phi1/Phi;
* ``maps``      : chi/fU/tV matrices for isomorphism certification;
* ``transport`` : phi0/phi1/Phi for structure transport.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction

from .linalg import Matrix
from .core import TwoTermAlgebra
from .morphisms import Morphism

FORMAT_VERSION = "1"

_RATIONAL_RE = re.compile(r"[+-]?\d+(/[+-]?\d+)?\Z")


class DocumentError(ValueError):
    """Malformed document; the message names the offending location."""


def format_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(text, where: str) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise DocumentError(f"{where}: invalid rational {text!r}")
    num, _, den = text.strip().partition("/")
    if den:
        d = int(den)
        if d == 0:
            raise DocumentError(f"{where}: zero denominator in {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(num))


def _matrix_to_lists(m: Matrix) -> list:
    return [[format_rational(e) for e in m.row(i)] for i in range(m.rows)]


def _parse_matrix(data, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise DocumentError(f"{where}: expected {rows} rows")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError(f"{where}[{i}]: expected {cols} entries")
        out.append([parse_rational(e, f"{where}[{i}][{j}]") for j, e in enumerate(row)])
    return Matrix.from_rows(out, cols=cols)


def _tensor3_to_lists(t) -> list:
    return [[[format_rational(e) for e in row] for row in plane] for plane in t]


def _parse_tensor3(data, shape, where: str):
    a, b, c = shape
    if not isinstance(data, list) or len(data) != a:
        raise DocumentError(f"{where}: expected outer length {a}")
    out = []
    for i, plane in enumerate(data):
        if not isinstance(plane, list) or len(plane) != b:
            raise DocumentError(f"{where}[{i}]: expected length {b}")
        rows = []
        for j, row in enumerate(plane):
            if not isinstance(row, list) or len(row) != c:
                raise DocumentError(f"{where}[{i}][{j}]: expected length {c}")
            rows.append(tuple(parse_rational(e, f"{where}[{i}][{j}][{k}]")
                              for k, e in enumerate(row)))
        out.append(tuple(rows))
    return tuple(out)


def _tensor4_to_lists(t) -> list:
    return [[[[format_rational(e) for e in row] for row in plane]
             for plane in block] for block in t]


def _parse_tensor4(data, shape, where: str):
    a = shape[0]
    if not isinstance(data, list) or len(data) != a:
        raise DocumentError(f"{where}: expected outer length {a}")
    return tuple(
        _parse_tensor3(block, shape[1:], f"{where}[{i}]") for i, block in enumerate(data)
    )


# ---------------------------------------------------------------------------
# algebra documents
# ---------------------------------------------------------------------------


def algebra_to_document(L: TwoTermAlgebra, name: str | None = None,
                        provenance: str | None = None) -> dict:
    doc = {"format_version": FORMAT_VERSION, "kind": "algebra"}
    if name is not None:
        doc["name"] = name
    if provenance is not None:
        doc["provenance"] = provenance
    doc["n0"] = L.n0
    doc["n1"] = L.n1
    doc["d"] = _matrix_to_lists(L.d)
    doc["b00"] = _tensor3_to_lists(L.b00)
    doc["b01"] = _tensor3_to_lists(L.b01)
    doc["jac"] = _tensor4_to_lists(L.jac)
    return doc


def _check_header(doc, kind: str) -> None:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError(
            f"format_version: expected {FORMAT_VERSION!r}, got {doc.get('format_version')!r}"
        )
    if doc.get("kind") != kind:
        raise DocumentError(f"kind: expected {kind!r}, got {doc.get('kind')!r}")


def algebra_from_document(doc: dict) -> TwoTermAlgebra:
    """Parse and structurally validate an algebra document.

    Shape errors and antisymmetry violations raise DocumentError with the
    offending location; equation failures are not checked here.
    """
    _check_header(doc, "algebra")
    try:
        n0 = int(doc["n0"])
        n1 = int(doc["n1"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"n0/n1: {exc}") from None
    if n0 < 0 or n1 < 0:
        raise DocumentError("n0/n1 must be nonnegative")
    for key in ("d", "b00", "b01", "jac"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    d = _parse_matrix(doc["d"], n0, n1, "d")
    b00 = _parse_tensor3(doc["b00"], (n0, n0, n0), "b00")
    b01 = _parse_tensor3(doc["b01"], (n0, n1, n1), "b01")
    jac = _parse_tensor4(doc["jac"], (n0, n0, n0, n1), "jac")
    L = TwoTermAlgebra(n0, n1, d, b00, b01, jac)
    from .core import structure_violations

    violations = structure_violations(L)
    if violations:
        raise DocumentError(violations[0])
    return L


# ---------------------------------------------------------------------------
# morphism documents
# ---------------------------------------------------------------------------


def morphism_to_document(m: Morphism, inline: bool = True,
                         source_path: str | None = None,
                         target_path: str | None = None) -> dict:
    doc = {"format_version": FORMAT_VERSION, "kind": "morphism"}
    doc["source"] = algebra_to_document(m.source) if source_path is None else source_path
    doc["target"] = algebra_to_document(m.target) if target_path is None else target_path
    doc["phi0"] = _matrix_to_lists(m.phi0)
    doc["phi1"] = _matrix_to_lists(m.phi1)
    doc["Phi"] = _tensor3_to_lists(m.Phi)
    return doc


def _resolve_algebra_ref(ref, base_dir: str, where: str) -> TwoTermAlgebra:
    if isinstance(ref, dict):
        return algebra_from_document(ref)
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
        return load_algebra(path)
    raise DocumentError(f"{where}: must be an inline algebra document or a file path")


def morphism_from_document(doc: dict, base_dir: str = ".") -> Morphism:
    _check_header(doc, "morphism")
    source = _resolve_algebra_ref(doc.get("source"), base_dir, "source")
    target = _resolve_algebra_ref(doc.get("target"), base_dir, "target")
    phi0 = _parse_matrix(doc.get("phi0"), target.n0, source.n0, "phi0")
    phi1 = _parse_matrix(doc.get("phi1"), target.n1, source.n1, "phi1")
    Phi = _parse_tensor3(doc.get("Phi"), (source.n0, source.n0, target.n1), "Phi")
    return Morphism(source, target, phi0, phi1, Phi)


# ---------------------------------------------------------------------------
# map documents
# ---------------------------------------------------------------------------


def maps_to_document(chi: Matrix, f_u: Matrix, t_v: Matrix) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "maps",
        "chi": _matrix_to_lists(chi),
        "fU": _matrix_to_lists(f_u),
        "tV": _matrix_to_lists(t_v),
    }


def maps_from_document(doc: dict) -> tuple[Matrix, Matrix, Matrix]:
    _check_header(doc, "maps")
    out = []
    for key in ("chi", "fU", "tV"):
        data = doc.get(key)
        if not isinstance(data, list):
            raise DocumentError(f"{key}: expected a matrix (list of rows)")
        rows = len(data)
        cols = len(data[0]) if rows else 0
        out.append(_parse_matrix(data, rows, cols, key))
    return tuple(out)


def transport_to_document(phi0: Matrix, phi1: Matrix, Phi) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "transport",
        "phi0": _matrix_to_lists(phi0),
        "phi1": _matrix_to_lists(phi1),
        "Phi": _tensor3_to_lists(Phi),
    }


def transport_from_document(doc: dict, L: TwoTermAlgebra):
    _check_header(doc, "transport")
    phi0 = _parse_matrix(doc.get("phi0"), L.n0, L.n0, "phi0")
    phi1 = _parse_matrix(doc.get("phi1"), L.n1, L.n1, "phi1")
    Phi = _parse_tensor3(doc.get("Phi"), (L.n0, L.n0, L.n1), "Phi")
    return phi0, phi1, Phi


# ---------------------------------------------------------------------------
# files
# ---------------------------------------------------------------------------


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None


def load_algebra(path: str) -> TwoTermAlgebra:
    return algebra_from_document(load_document(path))


def load_morphism(path: str) -> Morphism:
    return morphism_from_document(load_document(path), base_dir=os.path.dirname(path) or ".")


def save_document(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
