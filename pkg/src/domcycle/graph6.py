"""graph6 encoding and newline-delimited graph6 streams."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

from .graph import Graph, MAX_ORDER

log = logging.getLogger(__name__)

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _order_field(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = bytearray(_order_field(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(line: str | bytes, strict: bool = False) -> Graph:
    """Decode one graph6 record.

    A body with trailing data bytes missing is read as if they were ``?``
    (all zero), so ``D?`` is the empty graph on five vertices; ``strict``
    turns that into an error.  Surplus bytes are always an error.
    """
    if isinstance(line, str):
        try:
            data = line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("graph6 must be ASCII") from exc
    else:
        data = bytes(line)
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("bad long order field")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    if len(body) > need or (strict and len(body) < need):
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    padded = len(body) < need
    body = body + b"?" * (need - len(body))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if total % 6 and not padded and (body[-1] - 63) & ((1 << (6 - total % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class Graph6Record:
    index: int
    lineno: int
    line: str
    graph: Graph


def read_stream(
    source: str | Path | IO[str] | Iterable[str],
    skip_malformed: bool = False,
    diagnostics: list[str] | None = None,
) -> Iterator[Graph6Record]:
    """Iterate graph6 records from a path or from an iterable of lines.

    Blank lines and ``>>graph6<<`` header-only lines are skipped.  A malformed
    record raises :class:`Graph6Error` unless ``skip_malformed`` is set, in
    which case a message is appended to ``diagnostics`` and reading goes on.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="ascii", errors="strict") as fh:
            yield from read_stream(fh, skip_malformed, diagnostics)
        return
    index = 0
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if not line:
            continue
        try:
            g = graph6_decode(line)
        except Graph6Error as exc:
            msg = f"line {lineno}: {exc}"
            if not skip_malformed:
                raise Graph6Error(msg) from exc
            log.warning("skipping malformed record: %s", msg)
            if diagnostics is not None:
                diagnostics.append(msg)
            continue
        yield Graph6Record(index, lineno, line, g)
        index += 1
