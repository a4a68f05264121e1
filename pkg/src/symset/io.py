"""Plain-text signed graph files.

::

    # comment
    v 4
    e 0 1 +
    e 1 2 -
"""

from __future__ import annotations

import logging
from pathlib import Path

from .graph import NEG, POS, GraphError, SignedGraph

log = logging.getLogger(__name__)


class GraphFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_graph(text: str) -> SignedGraph:
    n = None
    edges = []
    seen: set[tuple[int, int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "v" or len(parts) != 2:
                raise GraphFileError("expected 'v <n>' as first declaration", lineno)
            n = _int(parts[1], lineno)
            if n < 0:
                raise GraphFileError("vertex count must be non-negative", lineno)
            continue
        if parts[0] == "v":
            raise GraphFileError("vertex count declared twice", lineno)
        if parts[0] != "e" or len(parts) != 4 or parts[3] not in ("+", "-"):
            raise GraphFileError(f"malformed edge line {raw.strip()!r}", lineno)
        u, v = _int(parts[1], lineno), _int(parts[2], lineno)
        if u == v:
            raise GraphFileError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFileError(f"vertex out of range 0..{n - 1}", lineno)
        s = POS if parts[3] == "+" else NEG
        key = (min(u, v), max(u, v), s)
        if key in seen:
            log.warning("line %d: duplicate %s edge %d-%d ignored", lineno, parts[3], u, v)
            continue
        seen.add(key)
        edges.append((u, v, s))
    if n is None:
        raise GraphFileError("missing 'v <n>' declaration")
    try:
        return SignedGraph(n, edges)
    except GraphError as exc:
        raise GraphFileError(str(exc)) from exc


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFileError(f"not an integer: {token!r}", lineno) from None


def format_graph(g: SignedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"v {g.n}")
    lines += [f"e {u} {v} {'+' if s == POS else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> SignedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: SignedGraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment), encoding="utf-8")
