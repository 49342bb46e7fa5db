from enum import Enum
from functools import cached_property
from typing import NamedTuple, Optional, Tuple, Union

from ..path import find_simple_path
from ..rel import Universe, Relation, VertexSet, Path, check_universe, transitive_closure, \
    asym_part, foreset, afterset, is_independent, is_transitive, has_cycle
from ..util import DomainError


class GraphError(DomainError):
    """
    Graph operation is applied to an input violating its precondition.
    """
    pass


class Color(Enum):
    BLUE = 'b'
    RED = 'r'


class TwoColoredDigraph:
    """
    Directed graph whose edges are colored blue or red. A pair may carry both colors and loops
    are allowed.
    """

    def __init__(self, eb: Relation, er: Relation):
        self.universe_ = check_universe(eb, er)
        self.eb_ = eb
        self.er_ = er

    @staticmethod
    def from_pairs(universe: Union[int, Universe], blue=(), red=()) -> 'TwoColoredDigraph':
        univ = Universe.of(universe)
        return TwoColoredDigraph(Relation.from_pairs(univ, blue), Relation.from_pairs(univ, red))

    @property
    def n(self):
        return self.universe_.n_

    def edges(self, color: Color) -> Relation:
        return self.eb_ if color == Color.BLUE else self.er_

    def closure(self, color: Color) -> Relation:
        return self.eb_plus if color == Color.BLUE else self.er_plus

    @cached_property
    def eb_plus(self):
        return transitive_closure(self.eb_)

    @cached_property
    def er_plus(self):
        return transitive_closure(self.er_)

    @cached_property
    def mono(self):
        return self.eb_plus | self.er_plus

    @cached_property
    def blue_order(self):
        """
        Strict order `Asym(E_b+)` on which the order of vertex sets is built.
        """
        return asym_part(self.eb_plus)

    @cached_property
    def red_order(self):
        return asym_part(self.er_plus)

    def __eq__(self, other):
        return isinstance(other, TwoColoredDigraph) and self.eb_ == other.eb_ and \
               self.er_ == other.er_

    def __hash__(self):
        return hash((self.eb_, self.er_))

    def __repr__(self):
        return f'TwoColoredDigraph(n={self.n}, blue={self.eb_.pairs}, red={self.er_.pairs})'


def mono(g: TwoColoredDigraph) -> Relation:
    return g.mono


class HypothesisReport(NamedTuple):
    # Asymmetric parts of both closures have no cycle, hence no infinite walk.
    blue_asym_acyclic: bool
    red_asym_acyclic: bool
    # Cycles of the raw colors, which break the hypothesis of the classical statement requiring
    # colors without infinite walks.
    blue_has_cycle: Optional[Path]
    red_has_cycle: Optional[Path]
    nonempty: bool


def check_hypotheses(g: TwoColoredDigraph) -> HypothesisReport:
    return HypothesisReport(
        blue_asym_acyclic=has_cycle(g.blue_order) is None,
        red_asym_acyclic=has_cycle(g.red_order) is None,
        blue_has_cycle=has_cycle(g.eb_),
        red_has_cycle=has_cycle(g.er_),
        nonempty=g.n > 0,
    )


def is_in_family_S(g: TwoColoredDigraph, s: VertexSet) -> bool:
    """
    Whether `s` is a nonempty `M`-independent set such that every vertex reached from `s` by a
    red path goes back to `s` by a monochromatic path.
    """
    check_universe(g.eb_, s)
    return not s.is_empty and is_independent(g.mono, s) and \
        afterset(s, g.er_plus).issubset(foreset(g.mono, s))


def absorbed_complement(g: TwoColoredDigraph, s: VertexSet) -> VertexSet:
    """
    Vertices neither in `s` nor reaching `s` by a monochromatic path.
    """
    check_universe(g.eb_, s)
    return ~(s | foreset(g.mono, s))


def is_solution(g: TwoColoredDigraph, s: VertexSet) -> bool:
    check_universe(g.eb_, s)
    if g.n == 0 or s.is_empty:
        return False
    return is_independent(g.mono, s) and absorbed_complement(g, s).is_empty


def is_kernel(g: TwoColoredDigraph, s: VertexSet) -> bool:
    check_universe(g.eb_, s)
    edges = g.eb_ | g.er_
    return is_independent(edges, s) and (s | foreset(edges, s)) == VertexSet.full(g.universe_)


def mono_path(g: TwoColoredDigraph, x: int, s: VertexSet) -> Optional[Tuple[Color, Path]]:
    """
    Find a monochromatic path from `x` to a member of `s`. Blue is tried before red, the lowest
    reachable member of `s` is targeted and a shortest path is returned.
    """
    check_universe(g.eb_, s)
    g.universe_.check_vertex(x)
    if x in s:
        raise GraphError(f'Vertex {x} is already in the target set.')
    for color in Color:
        closure = g.closure(color)
        target = next((t for t in s if (x, t) in closure), None)
        if target is not None:
            return color, find_simple_path(g.edges(color), x, target)
    return None


def transitive_colors(g: TwoColoredDigraph) -> TwoColoredDigraph:
    return TwoColoredDigraph(g.eb_plus, g.er_plus)


def is_transitive_graph(g: TwoColoredDigraph) -> bool:
    return is_transitive(g.eb_) and is_transitive(g.er_)
