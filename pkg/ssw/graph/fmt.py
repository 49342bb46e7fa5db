from typing import List, Tuple, Optional

from .base import TwoColoredDigraph, Color
from ..rel import Universe, Relation
from ..util import DomainError, CodeBuffer


class GraphFormatError(DomainError):
    """
    Graph file is malformed.
    """

    def __init__(self, line: int, msg: str):
        super().__init__(f'line {line}: {msg}')
        self.line_ = line


def parse_graph(text: str) -> TwoColoredDigraph:
    """
    Parse a graph file. The first meaningful line is the header `n <count>`, every following one
    is an edge `b <u> <v>` or `r <u> <v>`. Blank lines and `#` comments are ignored and duplicate
    edges are idempotent.
    """
    n: Optional[int] = None
    edges = {Color.BLUE: [], Color.RED: []}
    tags = {c.value: c for c in Color}
    for ln, line in enumerate(text.splitlines(), start=1):
        fields = line.split('#', 1)[0].split()
        if len(fields) == 0:
            continue

        # Header
        if n is None:
            if len(fields) != 2 or fields[0] != 'n':
                raise GraphFormatError(ln, f'Expect header \'n <count>\', got \'{line.strip()}\'.')
            n = _parse_int(ln, fields[1])
            continue

        # Edge
        if len(fields) != 3 or fields[0] not in tags:
            raise GraphFormatError(ln, f'Expect edge \'b|r <u> <v>\', got \'{line.strip()}\'.')
        u, v = _parse_int(ln, fields[1]), _parse_int(ln, fields[2])
        for w in (u, v):
            if w >= n:
                raise GraphFormatError(ln, f'Vertex {w} is out of range [0, {n}).')
        edges[tags[fields[0]]].append((u, v))

    if n is None:
        raise GraphFormatError(0, 'Missing header \'n <count>\'.')
    univ = Universe(n)
    return TwoColoredDigraph(Relation.from_pairs(univ, edges[Color.BLUE]),
                             Relation.from_pairs(univ, edges[Color.RED]))


def _parse_int(ln: int, s: str):
    try:
        v = int(s)
    except ValueError:
        raise GraphFormatError(ln, f'\'{s}\' is not an integer.')
    if v < 0:
        raise GraphFormatError(ln, f'{v} is negative.')
    return v


def render_graph(g: TwoColoredDigraph) -> str:
    buf = CodeBuffer()
    buf.writeln(f'n {g.n}')
    for color in Color:
        pairs: List[Tuple[int, int]] = g.edges(color).pairs
        for u, v in pairs:
            buf.writeln(f'{color.value} {u} {v}')
    return str(buf)
