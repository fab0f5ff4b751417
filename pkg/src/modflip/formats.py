"""Triangulation files: UTF-8 JSON with sides written as ``"b:p"`` for the
boundary arc alpha_p or ``"i:k:s"`` for side s of interior arc k."""

from __future__ import annotations

import json

from .surface import Triangulation, TriangulationError, check

FORMAT_VERSION = 1


def side_to_str(s: int) -> str:
    if s < 0:
        return f"b:{-s}"
    return f"i:{s >> 1}:{s & 1}"


def side_from_str(text: str) -> int:
    parts = text.split(":")
    try:
        if parts[0] == "b" and len(parts) == 2:
            p = int(parts[1])
            if p >= 1:
                return -p
        elif parts[0] == "i" and len(parts) == 3:
            k, s = int(parts[1]), int(parts[2])
            if k >= 0 and s in (0, 1):
                return 2 * k + s
    except ValueError:
        pass
    raise TriangulationError(f"bad side {text!r}")


def to_doc(T: Triangulation) -> dict:
    return {
        "format": FORMAT_VERSION,
        "genus": T.genus,
        "marks": T.marks,
        "triangles": [[side_to_str(s) for s in tri] for tri in T.triangles],
    }


def dumps(T: Triangulation) -> str:
    return json.dumps(to_doc(T)) + "\n"


def from_doc(doc: dict, validate: bool = True) -> Triangulation:
    if doc.get("format", FORMAT_VERSION) != FORMAT_VERSION:
        raise TriangulationError(f"unsupported format {doc.get('format')!r}")
    try:
        tris = [[side_from_str(x) for x in tri] for tri in doc["triangles"]]
        T = Triangulation(int(doc["genus"]), int(doc["marks"]), tris)
    except (KeyError, TypeError) as exc:
        raise TriangulationError(f"malformed triangulation file: {exc}") from None
    return check(T) if validate else T


def loads(text: str, validate: bool = True) -> Triangulation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TriangulationError(f"not JSON: {exc}") from None
    return from_doc(doc, validate)


def read(path) -> Triangulation:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(T: Triangulation, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(T))
