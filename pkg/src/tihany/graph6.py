"""graph6 reading and writing (the nauty one-line format)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_size(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def encode(g: Graph) -> str:
    out = _encode_size(g.n)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(c + 63) for c in out)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error("character outside the graph6 range 63..126")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise Graph6Error("truncated size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated size field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    try:
        return Graph(n, tuple(rows))
    except GraphError as exc:
        raise Graph6Error(str(exc)) from exc


def codec(direction: str, payload):
    """Single entry point: ``codec("encode", g)`` or ``codec("decode", line)``."""
    if direction == "encode":
        return encode(payload)
    if direction == "decode":
        return decode(payload)
    raise ValueError(f"unknown direction {direction!r}")


def iter_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if not line or line == HEADER:
            continue
        yield decode(line)


def read_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(iter_lines(fh))


def write_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode(g) + "\n")
