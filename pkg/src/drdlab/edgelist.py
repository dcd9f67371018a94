"""Line-oriented text format for digraphs.

::

    # optional comments
    digraph 3
    e 0 1
    e 1 2
    e 2 0

Writers emit the edges sorted lexicographically, so the text of a digraph
is canonical for a fixed labeling.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from drdlab.digraph import Digraph
from drdlab.errors import DigraphError


def dumps(g: Digraph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"digraph {g.n}")
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def loads(text: str) -> Digraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "digraph":
                raise DigraphError(f"line {lineno}: expected 'digraph <n>', got {raw!r}")
            n = _int(parts[1], lineno)
            continue
        if len(parts) != 3 or parts[0] != "e":
            raise DigraphError(f"line {lineno}: expected 'e <u> <v>', got {raw!r}")
        edges.append((_int(parts[1], lineno), _int(parts[2], lineno)))
    if n is None:
        raise DigraphError("missing 'digraph <n>' header")
    return Digraph.from_edge_list(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DigraphError(f"line {lineno}: not an integer: {token!r}") from None


def read(path: str | Path) -> Digraph:
    return loads(Path(path).read_text(encoding="ascii"))


def write(g: Digraph, path: str | Path, comments: list[str] | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(g, comments), encoding="ascii")
    return path


def digest(g: Digraph) -> str:
    """SHA-256 of the comment-free canonical text."""
    return hashlib.sha256(dumps(g).encode("ascii")).hexdigest()
