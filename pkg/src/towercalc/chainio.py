"""Chain-complex and chain-map files.

The on-disk format is JSON. A complex is an object with two members::

    {
      "ranks":      {"<degree>": <positive int>, ...},
      "boundaries": {"<degree>": [[int, ...], ...], ...}
    }

Degree keys are decimal integers in string form. ``boundaries[d]`` is the
row-major matrix of the boundary from degree d to degree d-1 and must have
shape ranks[d-1] x ranks[d]; degrees with zero rank or an all-zero boundary
are simply omitted. A chain map is::

    {
      "source": <complex object>,
      "target": <complex object>,
      "components": {"<degree>": [[int, ...], ...], ...}
    }

with components[d] of shape target.ranks[d] x source.ranks[d]. Serialization
is canonical (degrees ascending, two-space indent, trailing newline), so
parse/serialize round-trips are byte-identical.
"""

from __future__ import annotations

import json

from .chains import ChainComplex, ChainMap
from .errors import ChainFormatError, InvalidChainMapError, InvalidComplexError
from .matrix import Matrix


def complex_to_payload(c: ChainComplex) -> dict:
    return {
        "ranks": {str(d): r for d, r in c.ranks.items()},
        "boundaries": {str(d): m.to_lists() for d, m in c.boundaries.items()},
    }


def map_to_payload(f: ChainMap) -> dict:
    return {
        "source": complex_to_payload(f.source),
        "target": complex_to_payload(f.target),
        "components": {str(d): m.to_lists() for d, m in f.components.items()},
    }


def _int_key(key: str, where: str) -> int:
    try:
        return int(key)
    except ValueError:
        raise ChainFormatError(f"{where}: degree key {key!r} is not an integer") from None


def _matrix_from_payload(obj, where: str) -> list[list[int]]:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ChainFormatError(f"{where}: expected a list of rows")
    for r in obj:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ChainFormatError(f"{where}: entry {x!r} is not an integer")
    return obj


def complex_from_payload(obj, where: str = "complex") -> ChainComplex:
    if not isinstance(obj, dict):
        raise ChainFormatError(f"{where}: expected an object")
    unknown = set(obj) - {"ranks", "boundaries"}
    if unknown:
        raise ChainFormatError(f"{where}: unknown fields {sorted(unknown)}")
    ranks_obj = obj.get("ranks", {})
    bnd_obj = obj.get("boundaries", {})
    if not isinstance(ranks_obj, dict) or not isinstance(bnd_obj, dict):
        raise ChainFormatError(f"{where}: ranks and boundaries must be objects")
    ranks = {}
    for k, v in ranks_obj.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ChainFormatError(f"{where}: rank for degree {k} must be a nonnegative integer")
        ranks[_int_key(k, where)] = v
    boundaries = {}
    for k, v in bnd_obj.items():
        d = _int_key(k, where)
        rows = _matrix_from_payload(v, f"{where}: boundary {d}")
        try:
            boundaries[d] = Matrix.from_rows(rows, cols=ranks.get(d, 0))
        except ValueError as exc:
            raise ChainFormatError(f"{where}: boundary degree {d}: {exc}") from exc
    try:
        return ChainComplex(ranks, boundaries)
    except (InvalidComplexError, ValueError) as exc:
        raise ChainFormatError(f"{where}: {exc}") from exc


def map_from_payload(obj, where: str = "chain map") -> ChainMap:
    if not isinstance(obj, dict):
        raise ChainFormatError(f"{where}: expected an object")
    unknown = set(obj) - {"source", "target", "components"}
    if unknown:
        raise ChainFormatError(f"{where}: unknown fields {sorted(unknown)}")
    for fieldname in ("source", "target"):
        if fieldname not in obj:
            raise ChainFormatError(f"{where}: missing {fieldname!r}")
    source = complex_from_payload(obj["source"], f"{where}: source")
    target = complex_from_payload(obj["target"], f"{where}: target")
    comp_obj = obj.get("components", {})
    if not isinstance(comp_obj, dict):
        raise ChainFormatError(f"{where}: components must be an object")
    components = {}
    for k, v in comp_obj.items():
        d = _int_key(k, where)
        rows = _matrix_from_payload(v, f"{where}: component {d}")
        try:
            components[d] = Matrix.from_rows(rows, cols=source.rank(d))
        except ValueError as exc:
            raise ChainFormatError(f"{where}: component degree {d}: {exc}") from exc
    try:
        return ChainMap(source, target, components)
    except (InvalidChainMapError, ValueError) as exc:
        raise ChainFormatError(f"{where}: {exc}") from exc


def dumps(payload: dict) -> str:
    """Canonical JSON rendering shared by files and structured CLI output."""
    return json.dumps(payload, indent=2) + "\n"


def serialize_complex(c: ChainComplex) -> str:
    return dumps(complex_to_payload(c))


def serialize_map(f: ChainMap) -> str:
    return dumps(map_to_payload(f))


def parse_complex(text: str) -> ChainComplex:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ChainFormatError(f"invalid JSON: {exc}") from exc
    return complex_from_payload(obj)


def parse_map(text: str) -> ChainMap:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ChainFormatError(f"invalid JSON: {exc}") from exc
    return map_from_payload(obj)


def load_complex(path) -> ChainComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex(fh.read())


def load_map(path) -> ChainMap:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_map(fh.read())
