"""graph6, the ``.mg`` multigraph text format, and DOT export."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import GraphError, Multigraph


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise GraphError("graph6 encoding supports at most 258047 vertices here")


def to_graph6(g: Multigraph) -> str:
    if not g.is_simple:
        raise GraphError("graph6 encodes simple graphs only")
    adj = g.multiplicity
    bits = [1 if (i, j) in adj else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = _encode_n(g.n)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = (chunk << 1) | b
        data.append(chunk)
    return "".join(chr(x + 63) for x in data)


def from_graph6(text: str) -> Multigraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v < 64 for v in vals):
        raise ParseError("invalid graph6 character")
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise ParseError("unsupported graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    bits = [(v >> (5 - k)) & 1 for v in rest for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Multigraph(n, tuple(edges))


# -- .mg --------------------------------------------------------------------


def to_mg(g: Multigraph) -> str:
    lines = [f"{g.n} {g.size}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_mg(text: str) -> Multigraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.  Blank lines and ``#`` comments are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("missing header line 'n m'", 1)
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError("header must be two non-negative integers 'n m'", lineno)
    n, m = int(parts[0]), int(parts[1])
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"header announces {m} edges but {len(body)} were given", last)
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def read_graph(path: str) -> Multigraph:
    """Read a ``.mg`` file, or a graph6 file when the suffix is ``.g6``."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".g6"):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    return from_mg(text)


def iter_graph6(fh: TextIO) -> Iterator[Multigraph]:
    for lineno, line in enumerate(fh, start=1):
        if line.strip():
            try:
                yield from_graph6(line)
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None


# -- DOT ----------------------------------------------------------------------


def to_dot(g: Multigraph, name: str = "G", highlight: Iterable = ()) -> str:
    marked = {tuple(e) for e in highlight}
    out = [f"graph {name} {{"]
    for v in range(g.n):
        out.append(f'  {v} [label="{g.name(v)}"];')
    for u, v in g.edges:
        attr = " [color=red]" if (u, v) in marked else ""
        out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"
