"""graph6 encoding (McKay's format) and line-oriented corpus files.

Records are printable ASCII 63..126.  The header N(n) is one byte for
n <= 62, ``~`` plus three bytes up to 258047 and ``~~`` plus six bytes
beyond.  The body packs the upper triangle column by column (x(0,1),
x(0,2), x(1,2), x(0,3), ...) six bits per byte, zero padded.
"""
from __future__ import annotations

import io
import os
from typing import IO, Iterable, Iterator, Union

from .graphs import MAX_VERTICES, Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        bits.extend(col >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def parse_graph6(data: Union[bytes, str], max_n: int = MAX_VERTICES) -> Graph:
    """Decode one graph6 record; a single trailing newline is tolerated."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        base = len(HEADER)
    else:
        base = 0
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty record", base)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside printable range 63..126", base + i)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header", base + len(data))
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
        if n < 63:
            raise Graph6Error(f"non-canonical size header for n={n}", base)
    if n > max_n:
        raise Graph6Error(f"n={n} exceeds configured maximum {max_n}", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit vector: need {nbytes} bytes, got {len(body)}", base + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after bit vector", base + pos + nbytes)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbytes and ((body[-1] - 63) & ((1 << (6 * nbytes - nbits)) - 1)):
        raise Graph6Error("non-zero padding bits", base + pos + nbytes - 1)
    return Graph.from_masks(adj)


def iter_graph6(stream: Union[IO[bytes], IO[str], Iterable], max_n: int = MAX_VERTICES) -> Iterator[tuple[int, str, Graph]]:
    """Yield ``(line_number, record, graph)``; '>' comment lines are skipped."""
    for lineno, raw in enumerate(stream, start=1):
        line = raw.encode("ascii", errors="replace") if isinstance(raw, str) else raw
        line = line.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if not line or line.startswith(b">"):
            continue
        try:
            g = parse_graph6(line, max_n=max_n)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.message}", exc.offset) from None
        yield lineno, line.decode("ascii"), g


def read_graph6(source: Union[str, os.PathLike, IO], max_n: int = MAX_VERTICES) -> list[Graph]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return [g for _, _, g in iter_graph6(fh, max_n)]
    return [g for _, _, g in iter_graph6(source, max_n)]


def write_graph6(graphs: Iterable[Graph], target: Union[str, os.PathLike, IO[str]]) -> None:
    text = "".join(encode_graph6(g) + "\n" for g in graphs)
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        target.write(text)


def loads(text: str, max_n: int = MAX_VERTICES) -> list[Graph]:
    return read_graph6(io.BytesIO(text.encode("ascii")), max_n)
