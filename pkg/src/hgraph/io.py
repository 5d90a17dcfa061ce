"""Text formats: edge lists and update traces.

Edge list::

    # comment
    p 5 4          (optional: vertex count and edge count)
    0 1
    1 2

Trace, one operation per line::

    av 3 0 1       add vertex 3 adjacent to 0 and 1
    rv 3           remove vertex 3
    ae 0 2 / re 0 2
    q adj 0 2 | q census | q cliques 3 | q verdict copwin
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HGraph
from .errors import HGraphError

__all__ = [
    "ParseError",
    "ReplayError",
    "TraceOp",
    "format_edgelist",
    "load_edgelist",
    "parse_edgelist",
    "parse_trace",
]

VERDICT_CLASSES = ("diamond-free", "copwin", "strongly-chordal")


class ParseError(HGraphError):
    def __init__(self, line, msg):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class ReplayError(HGraphError):
    def __init__(self, line, msg):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _ids(tokens, line):
    out = []
    for t in tokens:
        if not t.isdigit():
            raise ParseError(line, f"expected a non-negative integer, got {t!r}")
        out.append(int(t))
    return out


def _content(text):
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield no, s.split()


def parse_edgelist(text):
    g = HGraph()
    declared = None
    seen = set()
    for no, tok in _content(text):
        if tok[0] == "p":
            if declared is not None or seen:
                raise ParseError(no, "header must come first and only once")
            if len(tok) != 3:
                raise ParseError(no, "header is 'p <n> <m>'")
            declared = _ids(tok[1:], no)
            header_line = no
            for v in range(declared[0]):
                g.vertex_insert(v)
            continue
        if len(tok) != 2:
            raise ParseError(no, f"expected '<u> <v>', got {' '.join(tok)!r}")
        u, v = _ids(tok, no)
        if u == v:
            raise ParseError(no, f"self-loop on {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(no, f"duplicate edge {u} {v}")
        if declared is not None and max(u, v) >= declared[0]:
            raise ParseError(no, f"vertex {max(u, v)} outside the declared range 0..{declared[0] - 1}")
        seen.add(key)
        for x in (u, v):
            if x not in g:
                g.vertex_insert(x)
        g.edge_insert(u, v)
    if declared is not None and declared[1] != g.m:
        raise ParseError(header_line, f"header declares {declared[1]} edges, found {g.m}")
    return g


def load_edgelist(path):
    with open(path) as fh:
        return parse_edgelist(fh.read())


def format_edgelist(g):
    """Header plus sorted edges; isolated vertices survive only via the header,
    so ids are assumed to be ``0..n-1``."""
    lines = [f"p {g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TraceOp:
    line: int
    op: str
    args: tuple


_ARITY = {"av": None, "rv": 1, "ae": 2, "re": 2}


def parse_trace(text):
    ops = []
    for no, tok in _content(text):
        head = tok[0]
        if head in _ARITY:
            args = _ids(tok[1:], no)
            want = _ARITY[head]
            if (want is None and not args) or (want is not None and len(args) != want):
                raise ParseError(no, f"wrong number of arguments for {head}")
            ops.append(TraceOp(no, head, tuple(args)))
        elif head == "q":
            if len(tok) < 2:
                raise ParseError(no, "query kind missing")
            kind, rest = tok[1], tok[2:]
            if kind == "adj" and len(rest) == 2:
                ops.append(TraceOp(no, "q adj", tuple(_ids(rest, no))))
            elif kind == "census" and not rest:
                ops.append(TraceOp(no, "q census", ()))
            elif kind == "cliques" and len(rest) == 1:
                ops.append(TraceOp(no, "q cliques", tuple(_ids(rest, no))))
            elif kind == "verdict" and len(rest) == 1 and rest[0] in VERDICT_CLASSES:
                ops.append(TraceOp(no, "q verdict", (rest[0],)))
            else:
                raise ParseError(no, f"unknown query {' '.join(tok[1:])!r}")
        else:
            raise ParseError(no, f"unknown operation {head!r}")
    return ops
