import pytest

from ssw.graph import TwoColoredDigraph, GraphGenerator, all_graphs
from ssw.rel import Relation, VertexSet, diagonal, afterset
from ssw.solve import ChainError, Chain, chain_maximum, s_infinity, rc_relation, is_left_total, \
    upper_bound_check, solve
from .strategies import seeded_rng


def vs(n, *members):
    return VertexSet.of(n, members)


def test_singleton_chain():
    g = TwoColoredDigraph.from_pairs(3, blue=[(0, 1)])
    s = vs(3, 1, 2)
    c = Chain(g, [s])
    c.validate()
    assert chain_maximum(c) == s
    assert s_infinity(c) == s
    assert rc_relation(c) == diagonal(s)
    assert upper_bound_check(c)


def test_empty_chain():
    c = Chain(TwoColoredDigraph.from_pairs(2), [])
    for op in (chain_maximum, s_infinity, rc_relation, upper_bound_check):
        with pytest.raises(ChainError):
            op(c)
    with pytest.raises(ChainError):
        c.validate()


def test_rc_relation():
    g = TwoColoredDigraph.from_pairs(3, blue=[(0, 1)])
    c = Chain(g, [vs(3, 0), vs(3, 1)])
    c.validate()
    assert s_infinity(c) == vs(3, 1)
    assert rc_relation(c) == Relation.from_pairs(3, [(1, 1), (0, 1)])
    assert is_left_total(rc_relation(c), c.union)
    assert upper_bound_check(c)


def test_validate():
    g = TwoColoredDigraph.from_pairs(2, blue=[(0, 1)])
    with pytest.raises(ChainError, match='strictly below'):
        Chain(g, [vs(2, 1), vs(2, 0)]).validate()
    with pytest.raises(ChainError, match='strictly below'):
        Chain(g, [vs(2, 0), vs(2, 0)]).validate()
    with pytest.raises(ChainError, match='not in the family'):
        Chain(g, [vs(2, 0, 1)]).validate()


def test_is_left_total():
    d = vs(4, 0, 2)
    assert is_left_total(diagonal(d), d)
    assert not is_left_total(Relation.empty(4), d)
    assert is_left_total(Relation.empty(4), VertexSet.empty(4))


def test_upper_bound_mutation():
    chain = [vs(2, 0), vs(2, 0, 1)]
    assert upper_bound_check(Chain(TwoColoredDigraph.from_pairs(2), chain))
    assert not upper_bound_check(Chain(TwoColoredDigraph.from_pairs(2, blue=[(0, 1)]), chain))


def _rc_by_cases(c: Chain):
    sinf = s_infinity(c)
    union = c.union
    pairs = []
    for x in union:
        for y in union:
            if x in sinf:
                if x == y:
                    pairs.append((x, y))
            elif (x, y) in c.order:
                pairs.append((x, y))
    return Relation.from_pairs(c.graph_.universe_, pairs)


def _check_chain(c: Chain):
    c.validate()
    top = chain_maximum(c)
    assert top == c[-1]
    assert s_infinity(c) == top
    assert upper_bound_check(c)
    rc = rc_relation(c)
    assert rc == _rc_by_cases(c)
    assert is_left_total(rc, c.union)
    sinf = s_infinity(c)
    for x in c.union - sinf:
        assert any((x, y) in c.order for y in afterset(vs(c.graph_.n, x), rc))


def test_solver_chains_exhaustive():
    for n in range(1, 3):
        for g in all_graphs(n):
            _check_chain(solve(g).chain)


def test_solver_chains_random():
    rng = seeded_rng(31)
    gen = GraphGenerator(rng)
    for _ in range(200):
        g = gen.generate(int(rng.integers(1, 13)), *rng.choice([0.1, 0.3, 0.6], size=2))
        _check_chain(solve(g).chain)
