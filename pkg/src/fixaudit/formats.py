"""Edge-list, graph6 and DOT serialisation."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError

FORMATS = ("edge-list", "graph6", "dot")


class ParseError(GraphError):
    pass


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, got {len(lines)}")
        return decode_graph6(lines[0])
    raise ParseError(f"unsupported input format {format!r}")


def emit_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "edge-list":
        lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
        return "\n".join(lines) + "\n"
    if format == "graph6":
        return encode_graph6(g) + "\n"
    if format == "dot":
        body = [f"  {v};" for v in range(g.n)]
        body += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
        return "graph G {\n" + "\n".join(body) + "\n}\n"
    raise GraphError(f"unsupported output format {format!r}")


def _parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit() or n is not None or edges:
                raise ParseError(f"line {lineno}: bad header {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if n is not None and max(u, v) >= n:
            raise ParseError(f"line {lineno}: vertex id {max(u, v)} >= n={n}")
        top = max(top, u, v)
        edges.append((u, v))
    if n is None:
        n = top + 1
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126)] + [chr(63 + ((n >> s) & 63)) for s in (12, 6, 0)]
    bitstream = []
    for j in range(1, n):
        for i in range(j):
            bitstream.append(1 if g.has_edge(i, j) else 0)
    while len(bitstream) % 6:
        bitstream.append(0)
    for k in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {pos}: invalid graph6 character {ch!r}")
    if ord(s[0]) < 126:
        n, body = ord(s[0]) - 63, s[1:]
        offset = 1
    else:
        if len(s) < 4 or ord(s[1]) == 126:
            raise ParseError("byte 1: unsupported graph6 size prefix")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
        offset = 4
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"byte {offset + min(len(body), need)}: expected {need} data bytes for n={n}, got {len(body)}"
        )
    bitstream = []
    for ch in body:
        val = ord(ch) - 63
        bitstream.extend((val >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[k]:
                edges.append((i, j))
            k += 1
    if any(bitstream[k:]):
        raise ParseError(f"byte {offset + len(body) - 1}: nonzero padding bits")
    return Graph.from_edges(n, edges)


def parse_inline_edges(spec: str) -> Graph:
    """Parse the compact ``"0-1,1-2,0-2"`` form."""
    edges = []
    for pos, tok in enumerate(t for t in spec.replace(" ", "").split(",") if t):
        try:
            a, b = tok.split("-")
            edges.append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"item {pos}: expected 'u-v', got {tok!r}") from None
    n = max((max(e) for e in edges), default=-1) + 1
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None
