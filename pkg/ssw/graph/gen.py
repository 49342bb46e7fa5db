from typing import Iterator

import numpy as np
from numpy.random import Generator, PCG64

from .base import TwoColoredDigraph, GraphError
from ..rel import Relation, Universe


class GraphGenerator:
    """
    Random two-colored digraph generation. Every ordered pair, loops included, independently
    receives each color with the given probability, so two-colored pairs occur.
    """

    def __init__(self, rng: Generator):
        self._rng = rng

    def generate(self, n: int, blue_density: float, red_density: float) -> TwoColoredDigraph:
        if n < 0:
            raise GraphError(f'Number of vertices {n} is negative.')
        for d in (blue_density, red_density):
            if not (0. <= d <= 1.):
                raise GraphError(f'Density {d} is not in [0, 1].')
        univ = Universe(n)
        return TwoColoredDigraph(self._gen_relation(univ, blue_density),
                                 self._gen_relation(univ, red_density))

    def relation(self, n: int, density: float) -> Relation:
        return self._gen_relation(Universe(n), density)

    def _gen_relation(self, univ: Universe, density: float):
        return Relation(univ, self._rng.random((univ.n_, univ.n_)) < density)


def random_graph(n: int, blue_density: float, red_density: float, seed: int) \
        -> TwoColoredDigraph:
    return GraphGenerator(Generator(PCG64(seed=seed))).generate(n, blue_density, red_density)


def all_relations(n: int) -> Iterator[Relation]:
    """
    Enumerate all `2 ** (n * n)` relations on a universe of size `n`.
    """
    univ = Universe(n)
    shifts = np.arange(n * n)
    for code in range(2 ** (n * n)):
        yield Relation(univ, ((code >> shifts) & 1).astype(bool).reshape((n, n)))


def all_graphs(n: int) -> Iterator[TwoColoredDigraph]:
    """
    Enumerate all `4 ** (n * n)` two-colored digraphs on a universe of size `n`, where each
    ordered pair is uncolored, blue, red or both.
    """
    rels = list(all_relations(n))
    for eb in rels:
        for er in rels:
            yield TwoColoredDigraph(eb, er)
