"""Schematic fixed-width drawings of diagrams.

The layout is, from top to bottom: numbered top points, one row per group of
non-overlapping cups (drawn ``\\__/``), a row marking where each transversal
thread leaves the top line (``|`` straight down, ``\\`` drifting right,
``/`` drifting left), the numbered bottom points, rows of caps (``/--\\``),
and a ``threads:`` line with the exact pair list.  The tail of straight
threads beyond the explicit boundary is marked with ``⋯``.
"""

from __future__ import annotations

from .diagram import Diagram, SKDiagram

TAIL = "⋯"
_LABEL = 8


def _columns(size: int, width: int) -> list[int]:
    return [_LABEL + i * width for i in range(size)]


def _arc_rows(arcs: list[tuple[int, int]], cols: list[int], left: str, fill: str, right: str) -> list[str]:
    rows: list[list[str]] = []
    extents: list[list[tuple[int, int]]] = []
    for a, b in sorted(arcs):
        x0, x1 = cols[a - 1], cols[b - 1]
        for row, ext in zip(rows, extents):
            if all(x1 < s or x0 > e for s, e in ext):
                break
        else:
            row = [" "] * (cols[-1] + 1)
            ext = []
            rows.append(row)
            extents.append(ext)
        ext.append((x0, x1))
        row[x0] = left
        for x in range(x0 + 1, x1):
            row[x] = fill
        row[x1] = right
    return ["".join(r).rstrip() for r in rows]


def render_ascii(d: Diagram | SKDiagram) -> str:
    circles = None
    if isinstance(d, SKDiagram):
        circles = d.circles
        d = d.diagram
    size = max(d.top, d.bottom)
    width = max(3, len(str(size)) + 2)
    cols = _columns(size + 1, width)

    def numbered(label: str, count: int) -> str:
        line = [" "] * (cols[-1] + 1)
        line[: len(label)] = label
        for i in range(count):
            text = str(i + 1)
            for off, ch in enumerate(text):
                line[cols[i] + off] = ch
        line[cols[count]] = TAIL
        return "".join(line).rstrip()

    out = [numbered("top", d.top)]
    cups = [(a, b) for a, b in d.pairs if a > 0 and b > 0]
    caps = [(-a, -b) for a, b in d.pairs if a < 0 and b < 0]
    for row in _arc_rows(cups, cols, "\\", "_", "/"):
        out.append(("cups" + row[4:]) if row.startswith("    ") else row)
    marks = [" "] * (cols[-1] + 1)
    for a, b in d.pairs:
        if a > 0 > b:
            marks[cols[a - 1]] = "|" if a == -b else ("\\" if -b > a else "/")
    out.append("".join(marks).rstrip())
    out.append(numbered("bottom", d.bottom))
    for row in _arc_rows(caps, cols, "/", "-", "\\"):
        out.append(("caps" + row[4:]) if row.startswith("    ") else row)
    pairs = " ".join(f"{{{a},{b}}}" for a, b in d.pairs)
    out.append(f"threads: {pairs}" if pairs else "threads: none")
    if circles is not None:
        out.append(f"circles: {circles}")
    return "\n".join(out) + "\n"
