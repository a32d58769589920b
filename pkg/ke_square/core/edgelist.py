"""Edge-list text format.

A record is a header line `n m` followed by m lines `u v` (0-based). `#`
starts a comment that runs to the end of the line; blank lines are ignored.
Several records may follow each other in one stream.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from ke_square.core.graph import Graph, from_edge_list
from ke_square.errors import EdgeListError, GraphConstructionError


def _tokens(lines: Iterable[str | bytes]) -> Iterator[tuple[int, list[int]]]:
    for line_num, raw in enumerate(lines, 1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise EdgeListError(f"invalid UTF-8 at byte {exc.start}", line_num) from exc
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if not all(tok.isascii() and tok.isdigit() for tok in tokens):
            raise EdgeListError(f"expected non-negative integers, got {content!r}", line_num)
        yield line_num, [int(tok) for tok in tokens]


def iter_edge_lists(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    """Parse consecutive edge-list records from a line stream.

    Byte lines are decoded as UTF-8 one at a time, so a bad byte is reported
    against its own line.
    """
    rows = _tokens(lines)
    for line_num, header in rows:
        if len(header) != 2:
            raise EdgeListError("expected header 'n m'", line_num)
        n, m = header
        edges = []
        last_line = line_num
        for _ in range(m):
            row = next(rows, None)
            if row is None:
                raise EdgeListError(f"expected {m} edges, found {len(edges)}", last_line)
            last_line, pair = row
            if len(pair) != 2:
                raise EdgeListError("expected edge line 'u v'", last_line)
            edges.append((pair[0], pair[1]))
        try:
            yield from_edge_list(n, edges)
        except GraphConstructionError as exc:
            raise EdgeListError(str(exc), last_line) from exc


def parse_edge_list(text: str) -> Graph:
    """Parse exactly one edge-list record."""
    graphs = list(iter_edge_lists(text.splitlines()))
    if len(graphs) != 1:
        raise EdgeListError(f"expected one graph, found {len(graphs)}", 1)
    return graphs[0]


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)]) + "\n"
