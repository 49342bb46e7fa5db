from typing import Sequence, Iterator

from ..graph import TwoColoredDigraph, is_in_family_S
from ..log import get_logger
from ..rel import Relation, VertexSet, check_universe, le_set, afterset, diagonal, restrict
from ..util import DomainError

logger = get_logger(__name__)


class ChainError(DomainError):
    """
    Sequence of vertex sets is not a chain of the family.
    """
    pass


class Chain:
    """
    Sequence of members of the family, strictly ascending in the order induced by the
    asymmetric part of the blue closure.
    """

    def __init__(self, graph: TwoColoredDigraph, sets: Sequence[VertexSet]):
        self.graph_ = graph
        self.sets_ = list(sets)
        for s in self.sets_:
            check_universe(graph.eb_, s)

    @property
    def order(self) -> Relation:
        return self.graph_.blue_order

    @property
    def union(self) -> VertexSet:
        result = VertexSet.empty(self.graph_.universe_)
        for s in self.sets_:
            result |= s
        return result

    def le(self, a: VertexSet, b: VertexSet):
        return le_set(self.order, a, b)

    def validate(self):
        if len(self.sets_) == 0:
            raise ChainError('Chain is empty.')
        for i, s in enumerate(self.sets_):
            if not is_in_family_S(self.graph_, s):
                raise ChainError(f'Member {i} {s} is not in the family.')
        for i, a in enumerate(self.sets_):
            for b in self.sets_[i + 1:]:
                if a == b or not self.le(a, b):
                    raise ChainError(f'{a} is not strictly below {b}.')

    def __len__(self):
        return len(self.sets_)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets_)

    def __getitem__(self, idx: int):
        return self.sets_[idx]

    def __repr__(self):
        return f'Chain({self.sets_})'


def _check_nonempty(c: Chain):
    if len(c) == 0:
        raise ChainError('Chain is empty.')


def chain_maximum(c: Chain) -> VertexSet:
    """
    Member above every other member of the chain.
    """
    _check_nonempty(c)
    for s in c:
        if all(c.le(u, s) for u in c):
            return s
    raise ChainError('Chain has no maximum.')


def s_infinity(c: Chain) -> VertexSet:
    """
    Vertices that belong to every member of the chain from some member on, evaluated literally
    from the definition.
    """
    _check_nonempty(c)
    result = VertexSet.empty(c.graph_.universe_)
    for s in c:
        common = VertexSet.full(c.graph_.universe_)
        for u in c:
            if c.le(s, u):
                common &= u
        result |= common
    return result


def rc_relation(c: Chain) -> Relation:
    """
    Relation on the union of the chain that keeps members of the limit set in place and sends any
    other vertex up along the asymmetric part of the blue closure.
    """
    sinf = s_infinity(c)
    rc = diagonal(sinf) | (diagonal(~sinf) @ c.order)
    return restrict(rc, c.union)


def is_left_total(r: Relation, domain: VertexSet) -> bool:
    check_universe(r, domain)
    return all(not afterset(VertexSet.of(r.universe_, [x]), r).is_empty for x in domain)


def upper_bound_check(c: Chain) -> bool:
    """
    Whether the limit set of the chain is a nonempty member of the family above every member of
    the chain. Chains having a member outside the family fail the check.
    """
    _check_nonempty(c)
    for s in c:
        if not is_in_family_S(c.graph_, s):
            logger.warning(f'Chain member {s} is not in the family.')
            return False
    sinf = s_infinity(c)
    return not sinf.is_empty and is_in_family_S(c.graph_, sinf) and \
        all(c.le(s, sinf) for s in c)
