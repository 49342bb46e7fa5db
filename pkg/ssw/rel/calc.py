from collections import deque
from enum import IntEnum, auto
from typing import Optional, NamedTuple, Dict

import numpy as np

from .base import Relation, VertexSet, RelationError, Path, check_universe


class BoolOp(IntEnum):
    UNION = auto()
    INTERSECTION = auto()
    COMPLEMENT = auto()
    CONVERSE = auto()


unary_ops = {BoolOp.COMPLEMENT, BoolOp.CONVERSE}


def boolean_ops(kind: BoolOp, r: Relation, r2: Optional[Relation] = None) -> Relation:
    """
    Set-theoretic connectives of the relation calculus.

    :param kind: Connective to apply.
    :param r: First operand.
    :param r2: Second operand, which must be given exactly for binary connectives.
    :return: Resulting relation on the same universe.
    """
    if (kind in unary_ops) != (r2 is None):
        raise RelationError(f'Connective {kind.name} expects '
                            f'{1 if kind in unary_ops else 2} operand(s).')
    if kind == BoolOp.UNION:
        return r | r2
    elif kind == BoolOp.INTERSECTION:
        return r & r2
    elif kind == BoolOp.COMPLEMENT:
        return ~r
    else:
        return r.converse


def compose(r: Relation, r2: Relation) -> Relation:
    return r @ r2


def power(r: Relation, k: int) -> Relation:
    # The zeroth power is the diagonal, which only appears inside reflexive transitive closure.
    if k < 1:
        raise RelationError(f'Power {k} is not positive.')
    result = r
    for _ in range(k - 1):
        result = result @ r
    return result


def transitive_closure(r: Relation) -> Relation:
    mat = r.mat_.copy()
    for k in range(r.universe_.n_):
        mat |= np.outer(mat[:, k], mat[k, :])
    return Relation(r.universe_, mat)


def reflexive_transitive_closure(r: Relation) -> Relation:
    return transitive_closure(r) | diagonal(VertexSet.full(r.universe_))


def diagonal(b: VertexSet) -> Relation:
    return Relation(b.universe_, np.diag(b.mask))


def restrict(r: Relation, b: VertexSet) -> Relation:
    """
    Pairs of `r` whose both ends are in `b`.
    """
    check_universe(r, b)
    m = b.mask
    return Relation(r.universe_, r.mat_ & np.outer(m, m))


def foreset(r: Relation, c: VertexSet) -> VertexSet:
    check_universe(r, c)
    return VertexSet.from_mask(r.universe_, r.mat_[:, c.mask].any(axis=1))


def afterset(b: VertexSet, r: Relation) -> VertexSet:
    check_universe(r, b)
    return VertexSet.from_mask(r.universe_, r.mat_[b.mask, :].any(axis=0))


def asym_part(r: Relation) -> Relation:
    return r & ~r.converse


def is_independent(r: Relation, s: VertexSet) -> bool:
    check_universe(r, s)
    idx = s.members
    sub = r.mat_[np.ix_(idx, idx)].copy()
    np.fill_diagonal(sub, False)
    return not sub.any()


def le_set(r: Relation, a: VertexSet, b: VertexSet) -> bool:
    """
    Order on vertex sets induced by a relation: every member of `a` is either in `b` or related
    to some member of `b`.
    """
    check_universe(r, a, b)
    return a.issubset(b | foreset(r, b))


def is_transitive(r: Relation) -> bool:
    return (r @ r).issubset(r)


def is_symmetric(r: Relation) -> bool:
    return r == r.converse


def is_reflexive(r: Relation) -> bool:
    return bool(np.diag(r.mat_).all())


class SporderReport(NamedTuple):
    irreflexive: bool
    transitive: bool

    @property
    def is_sporder(self):
        return self.irreflexive and self.transitive


def sporder_check(r: Relation) -> SporderReport:
    return SporderReport(irreflexive=not np.diag(r.mat_).any(), transitive=is_transitive(r))


def has_cycle(r: Relation) -> Optional[Path]:
    """
    Find a cycle of the relation, which exists iff the relation has an infinite walk on a finite
    universe.

    :return: Vertex sequence `v0, ..., vk` with `k >= 1`, `v0 == vk`, distinct interior vertices
        and consecutive pairs in `r`, or `None` if `r` is acyclic. The lowest vertex lying on a
        cycle is chosen as `v0` and the cycle is a shortest one through it.
    """
    closure = transitive_closure(r)
    for v in r.universe_.vertices:
        if not closure.mat_[v, v]:
            continue
        if r.mat_[v, v]:
            return [v, v]

        # Breadth-first search back to `v`
        parent: Dict[int, int] = {v: v}
        queue = deque([v])
        while len(queue) > 0:
            u = queue.popleft()
            for w in r.successors(u):
                if w == v:
                    cycle = [v]
                    while u != v:
                        cycle.append(u)
                        u = parent[u]
                    cycle.append(v)
                    cycle.reverse()
                    return cycle
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
    return None
