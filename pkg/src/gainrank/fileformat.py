"""The ``gaingraph v1`` text format.

::

    gaingraph v1
    # comment
    n 4
    e 1 2 1/4        # gain exp(2*pi*i/4) = i on the orientation 1 -> 2
    e 2 3 1          # gain 1
    e 3 4 c 0.6 0.8  # numeric unit gain

Vertices are 1-based in files and 0-based in memory. The inline form used in
reports joins the lines with ``"; "``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gains import Gain, GainError, Numeric, RationalAngle
from .graph import GainGraph

HEADER = "gaingraph v1"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_INT = re.compile(r"[+-]?\d+\Z")


def parse_gain(tokens: list[str], line: int | None = None) -> Gain:
    if len(tokens) == 1:
        tok = tokens[0]
        if tok == "1":
            return RationalAngle(0)
        p, sep, q = tok.partition("/")
        if sep and _INT.match(p) and _INT.match(q):
            if int(q) == 0:
                raise ParseError("gain denominator q = 0", line)
            return RationalAngle(int(p), int(q))
    elif len(tokens) == 3 and tokens[0] == "c":
        try:
            re_, im_ = float(tokens[1]), float(tokens[2])
        except ValueError:
            raise ParseError(f"bad numeric gain {' '.join(tokens)!r}", line) from None
        try:
            return Numeric(re_, im_)
        except GainError as exc:
            raise ParseError(str(exc), line) from None
    raise ParseError(f"bad gain {' '.join(tokens)!r}", line)


def format_gain(g: Gain) -> str:
    return str(g)


@dataclass
class _Record:
    line: int
    kind: str
    args: tuple


def _lex(text: str) -> list[_Record]:
    records = []
    for lineno, raw in enumerate(re.split(r"\n|;", text), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body == HEADER:
            records.append(_Record(lineno, "header", ()))
            continue
        tokens = body.split()
        if tokens[0] == "n" and len(tokens) == 2 and tokens[1].isdigit():
            records.append(_Record(lineno, "n", (int(tokens[1]),)))
        elif tokens[0] == "e" and len(tokens) >= 4:
            if not (tokens[1].isdigit() and tokens[2].isdigit()):
                raise ParseError(f"bad edge endpoints in {body!r}", lineno)
            u, v = int(tokens[1]), int(tokens[2])
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            records.append(_Record(lineno, "e", (u, v, parse_gain(tokens[3:], lineno))))
        else:
            raise ParseError(f"syntax error: {body!r}", lineno)
    return records


def parse(text: str) -> GainGraph:
    """Parse file or inline text. Isolated vertices declared by ``n`` are kept."""
    records = _lex(text)
    if not records or records[0].kind != "header":
        raise ParseError(f"expected header {HEADER!r}", records[0].line if records else None)
    n = None
    edges: dict[tuple[int, int], tuple[int, int, Gain]] = {}
    for rec in records[1:]:
        if rec.kind == "header":
            raise ParseError("repeated header", rec.line)
        if rec.kind == "n":
            if n is not None:
                raise ParseError("vertex count declared twice", rec.line)
            n = rec.args[0]
            continue
        if n is None:
            raise ParseError("edge before vertex count 'n'", rec.line)
        u, v, g = rec.args
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"endpoint outside 1..{n}", rec.line)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge {u} {v}", rec.line)
        edges[key] = (u - 1, v - 1, g)
    if n is None:
        raise ParseError("missing vertex count 'n'")
    return GainGraph.from_edges(range(n), edges.values())


def serialize(phi: GainGraph, inline: bool = False) -> str:
    """Canonical text: edges sorted by endpoints, each from its smaller label.

    Labels are compacted in ascending order; a ``# labels`` comment records
    the original labels (1-based) when they are not ``0..n-1``.
    """
    order = phi.order
    index = {v: i + 1 for i, v in enumerate(order)}
    lines = [HEADER]
    if order != list(range(len(order))):
        lines.append("# labels " + " ".join(str(v + 1) for v in order))
    lines.append(f"n {len(order)}")
    for u, v in sorted(phi.edges):
        lines.append(f"e {index[u]} {index[v]} {format_gain(phi.gain(u, v))}")
    return "; ".join(lines) if inline else "\n".join(lines) + "\n"


def read(path: str) -> GainGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
