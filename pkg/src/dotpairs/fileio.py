"""Point-set CSV files and JSON report serialization."""

from __future__ import annotations

import csv
import io as _io
import json
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path

from .geometry import Point, PointSet, format_rational, parse_rational

_PROVENANCE = "# provenance: "


class PointFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_points(text: str) -> PointSet:
    points = []
    seen = {}
    provenance = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if raw.startswith(_PROVENANCE):
                provenance = raw[len(_PROVENANCE):]
            continue
        fields = next(csv.reader([line]))
        if len(fields) != 2:
            raise PointFileError(f"expected 2 fields x,y, got {len(fields)}", lineno)
        try:
            p = Point(parse_rational(fields[0]), parse_rational(fields[1]))
        except ValueError as exc:
            raise PointFileError(str(exc), lineno) from None
        if p in seen:
            raise PointFileError(f"duplicate point {p} (first on line {seen[p]})", lineno)
        seen[p] = lineno
        points.append(p)
    return PointSet(points, provenance=provenance)


def read_points(path) -> PointSet:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def format_points(P: PointSet) -> str:
    buf = _io.StringIO()
    if P.provenance:
        buf.write(f"{_PROVENANCE}{P.provenance}\n")
    for p in P:
        buf.write(f"{format_rational(p.x)},{format_rational(p.y)}\n")
    return buf.getvalue()


def write_points(P: PointSet, path) -> None:
    Path(path).write_text(format_points(P), encoding="utf-8")


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {_key(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _key(k):
    if isinstance(k, tuple):
        return ",".join(str(v) for v in k)
    return str(k)


def dumps(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def dataclass_json(obj) -> dict:
    return _jsonable(asdict(obj))
