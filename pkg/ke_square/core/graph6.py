"""graph6 codec, short header only (n <= 62).

Each byte carries six bits offset by 63. The header byte is n + 63; the
payload lists the upper triangle of the adjacency matrix column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...), zero-padded to a multiple of six.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator

from ke_square.core.graph import Graph
from ke_square.errors import Graph6Error, UnsupportedSizeError

logger = logging.getLogger(__name__)

MAX_ORDER = 62
FILE_HEADER = b">>graph6<<"

_OFFSET = 63
_LONG_FORM = 126


def _payload_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def to_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding of g (no trailing newline)."""
    if g.n > MAX_ORDER:
        raise UnsupportedSizeError(f"graph6 short header supports n <= {MAX_ORDER}, got {g.n}")
    out = bytearray([g.n + _OFFSET])
    chunk = 0
    filled = 0
    for j in range(1, g.n):
        column = g.masks[j]
        for i in range(j):
            chunk = chunk << 1 | (column >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + _OFFSET)
                chunk = filled = 0
    if filled:
        out.append((chunk << (6 - filled)) + _OFFSET)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record. Surrounding whitespace is ignored."""
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", offset=exc.start) from exc
    data = text.strip()
    base = 0
    if data.startswith(FILE_HEADER):
        data = data[len(FILE_HEADER) :]
        base = len(FILE_HEADER)
    if not data:
        raise Graph6Error("empty graph6 record", offset=base)

    header = data[0]
    if header == _LONG_FORM:
        raise Graph6Error(f"long-form header unsupported (n > {MAX_ORDER})", offset=base)
    if not _OFFSET <= header < _LONG_FORM:
        raise Graph6Error(f"invalid header byte {header!r}", offset=base)
    n = header - _OFFSET

    expected = _payload_length(n)
    payload = data[1:]
    if len(payload) < expected:
        raise Graph6Error(
            f"truncated payload: expected {expected} bytes, got {len(payload)}",
            offset=base + len(data),
        )
    if len(payload) > expected:
        raise Graph6Error(f"{len(payload) - expected} trailing bytes", offset=base + 1 + expected)

    masks = [0] * n
    bits = _iter_payload_bits(payload, base + 1)
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return Graph(n, tuple(masks))


def _iter_payload_bits(payload: bytes, start: int) -> Iterator[int]:
    for pos, byte in enumerate(payload, start=start):
        value = byte - _OFFSET
        if not 0 <= value < 64:
            raise Graph6Error(f"invalid payload byte {byte!r}", offset=pos)
        for shift in range(5, -1, -1):
            yield value >> shift & 1


def iter_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse a graph6 stream: one graph per line.

    Blank lines and `#` comments are skipped; an optional `>>graph6<<` prefix
    is accepted on any line. Errors carry the 1-based line number.
    """
    for line_num, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line[:1] in ("#", b"#"):
            logger.debug("Skipping comment on line %d", line_num)
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(exc.reason, offset=exc.offset, line=line_num) from exc
