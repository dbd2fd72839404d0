"""JSON file formats for tables, operators, actions, union data and censuses."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .constructions import UnionSpec
from .errors import TableError
from .groups import FiniteGroup, validate_group
from .magma import CayleyTable, PhiAction

TABLE_KINDS = ("rack", "group", "raw")


class InputError(ValueError):
    """A file could not be read or does not match its expected format."""


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def load_json(source):
    """Parse ``source`` as inline JSON if it looks like JSON, else read it as a path."""
    text = str(source)
    head = text.lstrip()[:1]
    if head and head in "[{" and not Path(text).exists():
        origin = "inline argument"
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror or exc}") from exc
        origin = str(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {origin}: {exc.msg} (line {exc.lineno})") from exc


def table_to_json(t: CayleyTable, kind: str = "raw") -> dict:
    if kind not in TABLE_KINDS:
        raise ValueError(f"kind must be one of {TABLE_KINDS}")
    return {"kind": kind, "n": t.n, "table": t.rows()}


def table_from_json(d) -> tuple:
    """Return ``(kind, CayleyTable)``; the declared ``n`` must match the rows."""
    if not isinstance(d, dict) or "table" not in d:
        raise InputError('table file needs an object with a "table" field')
    kind = d.get("kind", "raw")
    if kind not in TABLE_KINDS:
        raise InputError(f"unknown table kind {kind!r}")
    try:
        t = CayleyTable(d["table"])
    except (TableError, TypeError, ValueError) as exc:
        raise InputError(f"bad table: {exc}") from exc
    if "n" in d and d["n"] != t.n:
        raise InputError(f'declared n = {d["n"]} but table has {t.n} rows')
    return kind, t


def read_table(source) -> CayleyTable:
    return table_from_json(load_json(source))[1]


def read_group(source) -> FiniteGroup:
    kind, t = table_from_json(load_json(source))
    return validate_group(t)


def write_json(path, obj) -> None:
    text = dumps(obj) + "\n"
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def operator_from_json(d) -> tuple:
    if isinstance(d, list):
        return tuple(int(v) for v in d)
    if isinstance(d, dict) and "map" in d:
        return tuple(int(v) for v in d["map"])
    raise InputError('operator must be a list or an object with a "map" field')


def operator_to_json(B) -> dict:
    return {"map": list(B)}


def phi_from_json(d) -> PhiAction:
    perms = d.get("perms") if isinstance(d, dict) else d
    if perms is None:
        raise InputError('action needs a "perms" field')
    try:
        return PhiAction(tuple(tuple(p) for p in perms))
    except ValueError as exc:
        raise InputError(f"bad action: {exc}") from exc


def phi_to_json(phi: PhiAction) -> dict:
    return {"perms": [list(p.images) for p in phi.perms]}


def union_spec_from_json(d) -> UnionSpec:
    try:
        return UnionSpec(tuple(map(tuple, d["sigma"])), tuple(map(tuple, d["tau"])))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad union spec: {exc}") from exc


def union_spec_to_json(spec: UnionSpec) -> dict:
    return {
        "sigma": [list(p.images) for p in spec.sigma],
        "tau": [list(p.images) for p in spec.tau],
    }


def census_lines(census) -> list:
    """JSON-lines for a census: one operator per line, then the summary record."""
    lines = [dumps(operator_to_json(op.map)) for op in census.operators]
    lines.append(
        dumps(
            {
                "summary": {
                    "structure": census.structure,
                    "kind": census.kind,
                    "count": census.count,
                    "space": census.space,
                }
            }
        )
    )
    return lines
