from typing import Iterable, List, Tuple, Union, Iterator

import numpy as np
from bitarray import bitarray, frozenbitarray

from ..util import DomainError, fmt_vertices

# Finite vertex sequence. Walks, paths and cycle witnesses are all represented this way.
Path = List[int]


class RelationError(DomainError):
    """
    Operands of the relation calculus are inconsistent.
    """
    pass


class Universe:
    """
    Finite ground set of vertices `0..n-1`.
    """

    def __init__(self, n: int):
        if n < 0:
            raise RelationError(f'Universe size {n} is negative.')
        self.n_ = n

    @staticmethod
    def of(u: Union[int, 'Universe']) -> 'Universe':
        return u if isinstance(u, Universe) else Universe(u)

    @property
    def vertices(self):
        return range(self.n_)

    def check_vertex(self, v: int):
        if not (0 <= v < self.n_):
            raise RelationError(f'Vertex {v} is not in universe of size {self.n_}.')
        return v

    def __len__(self):
        return self.n_

    def __eq__(self, other):
        return isinstance(other, Universe) and self.n_ == other.n_

    def __hash__(self):
        return hash(self.n_)

    def __repr__(self):
        return f'Universe({self.n_})'


def check_universe(*objs: Union['Relation', 'VertexSet']) -> Universe:
    univ = objs[0].universe_
    for o in objs[1:]:
        if o.universe_ != univ:
            raise RelationError('universe mismatch')
    return univ


def _zeros(n: int):
    a = bitarray(n)
    a.setall(0)
    return a


class VertexSet:
    """
    Immutable subset of a universe, stored as a frozen bit vector.
    """

    def __init__(self, universe: Union[int, Universe], bits: bitarray):
        self.universe_ = Universe.of(universe)
        if len(bits) != self.universe_.n_:
            raise RelationError(
                f'Expect bit vector of length {self.universe_.n_}, got {len(bits)}.'
            )
        self.bits_ = frozenbitarray(bits)

    @staticmethod
    def of(universe: Union[int, Universe], members: Iterable[int]) -> 'VertexSet':
        univ = Universe.of(universe)
        a = _zeros(univ.n_)
        for v in members:
            a[univ.check_vertex(v)] = 1
        return VertexSet(univ, a)

    @staticmethod
    def empty(universe: Union[int, Universe]) -> 'VertexSet':
        univ = Universe.of(universe)
        return VertexSet(univ, _zeros(univ.n_))

    @staticmethod
    def full(universe: Union[int, Universe]) -> 'VertexSet':
        univ = Universe.of(universe)
        a = bitarray(univ.n_)
        a.setall(1)
        return VertexSet(univ, a)

    @staticmethod
    def from_mask(universe: Union[int, Universe], mask: np.ndarray) -> 'VertexSet':
        return VertexSet(universe, bitarray([bool(b) for b in mask]))

    @property
    def mask(self) -> np.ndarray:
        return np.array(self.bits_.tolist(), dtype=bool).reshape(self.universe_.n_)

    @property
    def members(self) -> List[int]:
        return [i for i, b in enumerate(self.bits_) if b]

    @property
    def is_empty(self):
        return not self.bits_.any()

    @property
    def sort_key(self):
        """
        Canonical order of vertex sets: by size, then lexicographically by sorted members.
        """
        return len(self), self.members

    def issubset(self, other: 'VertexSet'):
        check_universe(self, other)
        return not (self.bits_ & ~other.bits_).any()

    def __le__(self, other: 'VertexSet'):
        return self.issubset(other)

    def __or__(self, other: 'VertexSet'):
        check_universe(self, other)
        return VertexSet(self.universe_, self.bits_ | other.bits_)

    def __and__(self, other: 'VertexSet'):
        check_universe(self, other)
        return VertexSet(self.universe_, self.bits_ & other.bits_)

    def __sub__(self, other: 'VertexSet'):
        check_universe(self, other)
        return VertexSet(self.universe_, self.bits_ & ~other.bits_)

    def __invert__(self):
        return VertexSet(self.universe_, ~self.bits_)

    def __contains__(self, v: int):
        return 0 <= v < self.universe_.n_ and bool(self.bits_[v])

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self):
        return self.bits_.count(1)

    def __eq__(self, other):
        return isinstance(other, VertexSet) and self.universe_ == other.universe_ and \
               self.bits_ == other.bits_

    def __hash__(self):
        return hash((self.universe_.n_, self.bits_))

    def __repr__(self):
        return f'VertexSet({fmt_vertices(self.members)})'


class Relation:
    """
    Immutable binary relation on a universe, stored as a dense boolean matrix whose entry
    `(x, y)` tells whether `x R y`.
    """

    def __init__(self, universe: Union[int, Universe], mat: np.ndarray):
        self.universe_ = Universe.of(universe)
        n = self.universe_.n_
        mat = np.array(mat, dtype=bool)
        if n == 0 and mat.size == 0:
            mat = mat.reshape((0, 0))
        if mat.shape != (n, n):
            raise RelationError(f'Expect matrix of shape {(n, n)}, got {mat.shape}.')
        mat.setflags(write=False)
        self.mat_ = mat

    @staticmethod
    def from_pairs(universe: Union[int, Universe], pairs: Iterable[Tuple[int, int]]) \
            -> 'Relation':
        univ = Universe.of(universe)
        mat = np.zeros((univ.n_, univ.n_), dtype=bool)
        for x, y in pairs:
            mat[univ.check_vertex(x), univ.check_vertex(y)] = True
        return Relation(univ, mat)

    @staticmethod
    def empty(universe: Union[int, Universe]) -> 'Relation':
        univ = Universe.of(universe)
        return Relation(univ, np.zeros((univ.n_, univ.n_), dtype=bool))

    @staticmethod
    def full(universe: Union[int, Universe]) -> 'Relation':
        univ = Universe.of(universe)
        return Relation(univ, np.ones((univ.n_, univ.n_), dtype=bool))

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return [(int(x), int(y)) for x, y in np.argwhere(self.mat_)]

    def successors(self, x: int) -> List[int]:
        return np.flatnonzero(self.mat_[self.universe_.check_vertex(x)]).tolist()

    @property
    def converse(self):
        return Relation(self.universe_, self.mat_.T)

    def issubset(self, other: 'Relation'):
        check_universe(self, other)
        return not (self.mat_ & ~other.mat_).any()

    def __le__(self, other: 'Relation'):
        return self.issubset(other)

    def __or__(self, other: 'Relation'):
        check_universe(self, other)
        return Relation(self.universe_, self.mat_ | other.mat_)

    def __and__(self, other: 'Relation'):
        check_universe(self, other)
        return Relation(self.universe_, self.mat_ & other.mat_)

    def __invert__(self):
        return Relation(self.universe_, ~self.mat_)

    def __matmul__(self, other: 'Relation'):
        check_universe(self, other)
        prod = self.mat_.astype(np.int64) @ other.mat_.astype(np.int64)
        return Relation(self.universe_, prod > 0)

    def __contains__(self, pair: Tuple[int, int]):
        x, y = pair
        n = self.universe_.n_
        return 0 <= x < n and 0 <= y < n and bool(self.mat_[x, y])

    def __len__(self):
        return int(np.count_nonzero(self.mat_))

    def __eq__(self, other):
        return isinstance(other, Relation) and self.universe_ == other.universe_ and \
               np.array_equal(self.mat_, other.mat_)

    def __hash__(self):
        return hash((self.universe_.n_, self.mat_.tobytes()))

    def __repr__(self):
        return f'Relation({self.universe_.n_}, {self.pairs})'
