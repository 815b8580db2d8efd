"""Line-oriented record format for diagrams and webs.

One object per line, space-separated::

    p r k code                      # coral diagram
    p r k code boundary classes     # oriented web

``code`` is the comma-joined canonical code, ``boundary`` a word over
``+-`` and ``classes`` one character per vertex in preorder (``o`` source,
``i`` sink). For webs, ``p r k`` name the Raney number the web is counted
by, e.g. ``4 2 1`` for a constant-boundary A2 web with 6 boundary points.
"""

from __future__ import annotations

from typing import NamedTuple

from .trees import format_code, parse_code


class Record(NamedTuple):
    p: int
    r: int
    k: int
    code: tuple[int, ...]
    boundary: str | None = None
    classes: str | None = None


def format_record(rec: Record) -> str:
    fields = [str(rec.p), str(rec.r), str(rec.k), format_code(rec.code)]
    if rec.boundary is not None:
        fields += [rec.boundary, rec.classes or ""]
    return " ".join(fields)


def parse_record(line: str) -> Record:
    fields = line.split()
    if len(fields) not in (4, 6):
        raise ValueError(f"expected 4 or 6 fields, got {len(fields)}: {line!r}")
    p, r, k = (int(x) for x in fields[:3])
    code = parse_code(fields[3])
    if len(fields) == 4:
        return Record(p, r, k, code)
    boundary, classes = fields[4], fields[5]
    if set(boundary) - {"+", "-"} or set(classes) - {"o", "i"} or len(classes) != len(code):
        raise ValueError(f"bad web fields: {line!r}")
    return Record(p, r, k, code, boundary, classes)
