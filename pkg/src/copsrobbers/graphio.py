"""Edge-list text I/O.

Format: first non-comment line is the vertex count n; every following
nonempty line is "u v" with 0 <= u < v < n.  '#' starts a comment, encoding
is UTF-8 with LF line endings.  The writer emits edges sorted
lexicographically, so output is bit-exact canonical for a given graph.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Iterable, TextIO

from .graph import Graph


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _strip(line: str) -> str:
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    return line.strip()


def parse_graph(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise EdgeListParseError(line_no, f"expected vertex count, got {line!r}")
            if n < 1:
                raise EdgeListParseError(line_no, f"vertex count must be >= 1, got {n}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer endpoint in {line!r}")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        if not 0 <= u < v < n:
            raise EdgeListParseError(
                line_no, f"edge ({u}, {v}) violates 0 <= u < v < n={n}"
            )
        if (u, v) in seen:
            raise EdgeListParseError(line_no, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise EdgeListParseError(1, "empty input: missing vertex count")
    return Graph.from_edges(n, edges)


def read_graph(source: str | Path | TextIO) -> Graph:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    return parse_graph(text)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = io.StringIO()
    for comment in comments:
        out.write(f"# {comment}\n")
    out.write(f"{g.n}\n")
    for u, v in g.edges():
        out.write(f"{u} {v}\n")
    return out.getvalue()


def write_graph(g: Graph, target: str | Path | TextIO, comments: Iterable[str] = ()) -> None:
    text = format_graph(g, comments)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8", newline="\n")
    else:
        target.write(text)
