"""Tagged-tree JSON encoding of invariants (``.stinv`` files).

Every node is an object whose ``"op"`` names the constructor; the remaining
keys are the constructor's fields in declaration order.  Compact output has no
insignificant whitespace and is byte-deterministic, so it doubles as a
fingerprint of a normalized term.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields
from typing import Any

from .errors import DocumentSyntaxError, RangeError, SchemaError
from .terms import OP_TYPES, Invariant

__all__ = [
    "ModelDocument", "FORMAT_VERSION", "to_tree", "from_tree", "serialize", "parse",
    "serialize_document", "parse_document", "load", "dump",
]

FORMAT_VERSION = "1"

_COMPACT = {"separators": (",", ":"), "ensure_ascii": False}
_PRETTY = {"indent": 2, "ensure_ascii": False}


@dataclass(frozen=True)
class ModelDocument:
    root: Invariant
    version: str = FORMAT_VERSION


def to_tree(inv: Invariant) -> dict[str, Any]:
    node: dict[str, Any] = {"op": type(inv).__name__}
    for f in fields(inv):
        v = getattr(inv, f.name)
        if isinstance(v, Invariant):
            v = to_tree(v)
        elif isinstance(v, tuple):
            v = [to_tree(c) for c in v]
        node[f.name] = v
    return node


def _dumps(obj: Any, mode: str) -> str:
    if mode == "compact":
        return json.dumps(obj, **_COMPACT)
    if mode == "pretty":
        return json.dumps(obj, **_PRETTY)
    raise ValueError(f"unknown serialization mode {mode!r}")


def serialize(inv: Invariant, mode: str = "compact") -> str:
    return _dumps(to_tree(inv), mode)


def serialize_document(doc: ModelDocument, mode: str = "compact") -> str:
    return _dumps({"version": doc.version, "root": to_tree(doc.root)}, mode)


# ---------------------------------------------------------------------------
# parsing

_INT_FIELDS = {"x", "y", "z", "x1", "y1", "z1", "x2", "y2", "z2", "radius",
               "timepoint", "timepoint1", "timepoint2"}
_TEXT_FIELDS = {"owner", "event", "state", "node", "source", "target"}
_CHILD_FIELDS = {"t", "t1", "t2", "premise", "conclusion"}


def _field_value(op: str, name: str, raw: Any, path: str) -> Any:
    where = f"{path}: field {name!r} of {op}"
    if name in _CHILD_FIELDS:
        return from_tree(raw, f"{path}.{name}")
    if name == "args":
        if not isinstance(raw, list):
            raise SchemaError(f"{where} must be a list")
        return [from_tree(c, f"{path}.args[{i}]") for i, c in enumerate(raw)]
    if name in _INT_FIELDS:
        if type(raw) is not int:
            raise SchemaError(f"{where} must be an integer")
        return raw
    if name in _TEXT_FIELDS:
        if not isinstance(raw, str):
            raise SchemaError(f"{where} must be a string")
        return raw
    if name == "p":
        if type(raw) not in (int, float) or not math.isfinite(raw):
            raise SchemaError(f"{where} must be a number")
        return raw
    raise SchemaError(f"{where} is not a known field")  # pragma: no cover


def from_tree(node: Any, path: str = "$") -> Invariant:
    if not isinstance(node, dict):
        raise SchemaError(f"{path}: expected an object, got {type(node).__name__}")
    op = node.get("op")
    if not isinstance(op, str):
        raise SchemaError(f"{path}: missing or non-string 'op'")
    cls = OP_TYPES.get(op)
    if cls is None:
        raise SchemaError(f"{path}: unknown op {op!r}")
    names = [f.name for f in fields(cls)]
    missing = [n for n in names if n not in node]
    if missing:
        raise SchemaError(f"{path}: {op} is missing field {missing[0]!r}")
    extra = sorted(set(node) - set(names) - {"op"})
    if extra:
        raise SchemaError(f"{path}: {op} has unexpected field {extra[0]!r}")
    values = [_field_value(op, n, node[n], path) for n in names]
    try:
        return cls(*values)
    except ValueError as exc:
        raise RangeError(f"{path}: {op}: {exc}") from None


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    except RecursionError:
        raise DocumentSyntaxError("document nested too deeply", 1, 1) from None


def parse_document(text: str) -> ModelDocument:
    """Parse a document; a bare term tree is accepted as a version-1 document."""
    obj = _loads(text)
    if isinstance(obj, dict) and "version" in obj:
        if obj["version"] != FORMAT_VERSION:
            raise SchemaError(f"unsupported document version {obj['version']!r}")
        if set(obj) != {"version", "root"}:
            raise SchemaError("a document has exactly the keys 'version' and 'root'")
        return ModelDocument(from_tree(obj["root"], "$.root"), FORMAT_VERSION)
    return ModelDocument(from_tree(obj))


def parse(text: str) -> Invariant:
    return parse_document(text).root


def load(path) -> Invariant:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(inv: Invariant, path, mode: str = "compact") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(inv, mode))
        fh.write("\n")
