from typing import NamedTuple, Optional

import numpy as np

from .chain import Chain
from ..config import params
from ..graph import TwoColoredDigraph, is_in_family_S, absorbed_complement, is_solution, \
    GraphError, is_transitive_graph
from ..log import get_logger
from ..rel import Relation, VertexSet, check_universe, le_set
from ..util import DomainError, fmt_vertices

logger = get_logger(__name__)


class SolveError(DomainError):
    """
    Construction of an absorbing independent set cannot proceed.
    """
    pass


class SolveTrace(NamedTuple):
    iterations: int
    chain: Chain
    result: VertexSet


class SSWSolver:
    """
    Construct an `M`-independent set absorbing every other vertex by monochromatic paths.

    A one-vertex member of the family is seeded from a sink of the red strict order. While some
    vertex is neither in the current set nor absorbed by it, the growth step adds such a vertex
    and drops the members strictly below it in the blue strict order. Each step ascends strictly
    in a finite partial order, so the loop terminates at a set absorbing all vertices.
    """

    def __init__(self, g: TwoColoredDigraph):
        self._g = g
        self._check = params['solver.check_trace']

    def seed(self) -> VertexSet:
        if self._g.n == 0:
            raise SolveError('empty vertex set (Assumption A1)')
        s = VertexSet.of(self._g.universe_, [
            self._lowest_sink(self._g.red_order, VertexSet.full(self._g.universe_))
        ])
        if self._check and not is_in_family_S(self._g, s):
            raise SolveError(f'construction invariant violated: seed {s} is not in the family')
        return s

    def t_m(self, sm: VertexSet, x: int) -> VertexSet:
        """
        Members of `sm` strictly below `x` in the blue strict order.
        """
        check_universe(self._g.eb_, sm)
        self._g.universe_.check_vertex(x)
        if x in sm or x not in absorbed_complement(self._g, sm):
            raise SolveError(f'precondition violated: vertex {x} is in or absorbed by {sm}')
        below = VertexSet.from_mask(self._g.universe_, self._g.blue_order.mat_[:, x])
        return sm & below

    def grow_step(self, sm: VertexSet) -> VertexSet:
        # Check preconditions
        if not is_in_family_S(self._g, sm):
            raise SolveError(f'precondition violated: {sm} is not in the family')
        se = absorbed_complement(self._g, sm)
        if se.is_empty:
            raise SolveError(f'precondition violated: {sm} already absorbs every vertex')

        # Replace members below the new vertex with it
        x = self._lowest_sink(self._g.red_order, se)
        tm = self.t_m(sm, x)
        s_new = (sm - tm) | VertexSet.of(self._g.universe_, [x])
        logger.debug(f'Add vertex {x}, remove {fmt_vertices(tm.members)}, '
                     f'{len(sm)} -> {len(s_new)} member(s).')

        # Check postconditions
        if self._check:
            if not is_in_family_S(self._g, s_new):
                raise SolveError(f'construction invariant violated: {s_new} is not in the family')
            if not le_set(self._g.blue_order, sm, s_new) or s_new == sm:
                raise SolveError(
                    f'construction invariant violated: {s_new} is not strictly above {sm}'
                )

        return s_new

    def solve(self) -> SolveTrace:
        sm = self.seed()
        sets = [sm]
        max_iter: Optional[int] = params['solver.max_iter']
        budget = 2 ** self._g.n if max_iter is None else max_iter
        while not absorbed_complement(self._g, sm).is_empty:
            if len(sets) > budget:
                raise SolveError('non-termination (should be unreachable)')
            sm = self.grow_step(sm)
            sets.append(sm)
        if not is_solution(self._g, sm):
            raise SolveError(f'construction invariant violated: {sm} is not a solution')
        logger.debug(f'Solved in {len(sets) - 1} iteration(s): {fmt_vertices(sm.members)}.')
        return SolveTrace(len(sets) - 1, Chain(self._g, sets), sm)

    @staticmethod
    def _lowest_sink(order: Relation, within: VertexSet) -> int:
        # Vertices of `within` without successor in `within`
        mask = within.mask
        cand = mask & ~(order.mat_ & mask[np.newaxis, :]).any(axis=1)
        idx = np.flatnonzero(cand)
        if len(idx) == 0:
            raise SolveError(f'construction invariant violated: no sink in {within}')
        return int(idx[0])


def seed(g: TwoColoredDigraph) -> VertexSet:
    return SSWSolver(g).seed()


def t_m(g: TwoColoredDigraph, sm: VertexSet, x: int) -> VertexSet:
    return SSWSolver(g).t_m(sm, x)


def grow_step(g: TwoColoredDigraph, sm: VertexSet) -> VertexSet:
    return SSWSolver(g).grow_step(sm)


def solve(g: TwoColoredDigraph) -> SolveTrace:
    return SSWSolver(g).solve()


def find_kernel(g: TwoColoredDigraph) -> VertexSet:
    """
    Kernel of a digraph whose two color classes are both transitive.
    """
    if not is_transitive_graph(g):
        raise GraphError('Both colors must be transitive to guarantee a kernel.')
    return solve(g).result
