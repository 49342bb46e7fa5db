import time

import pytest
from hypothesis import given, settings

from ssw.graph import TwoColoredDigraph, GraphGenerator, all_graphs, is_solution, \
    is_in_family_S, is_kernel
from ssw.oracle import OracleError, enumerate_solutions, classify, reachability_oracle
from ssw.rel import Relation, VertexSet, diagonal, transitive_closure
from ssw.solve import solve
from .strategies import graphs, relations, all_subsets, bidirectional_chain, seeded_rng


def vs(n, *members):
    return VertexSet.of(n, members)


def test_single_vertex():
    report = enumerate_solutions(TwoColoredDigraph.from_pairs(1))
    assert report.valid_solutions == [vs(1, 0)]
    assert report.family_S_members == [vs(1, 0)]
    assert report.kernel_sets == [vs(1, 0)]
    assert report.maximal_members == [vs(1, 0)]


def test_empty_graph():
    report = enumerate_solutions(TwoColoredDigraph.from_pairs(0))
    assert report.valid_solutions == [] and report.family_S_members == []
    assert report.kernel_sets == [VertexSet.empty(0)]


def test_bidirectional_chain():
    report = enumerate_solutions(bidirectional_chain(5))
    assert vs(5, 0) in report.valid_solutions
    assert report.valid_solutions == [vs(5, v) for v in range(5)]


def test_cap():
    with pytest.raises(OracleError, match='oracle cap exceeded'):
        enumerate_solutions(TwoColoredDigraph.from_pairs(21))


def test_canonical_order():
    report = enumerate_solutions(TwoColoredDigraph.from_pairs(3))
    assert [s.members for s in report.family_S_members] == \
           [[0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]]
    assert report.valid_solutions == [VertexSet.full(3)]
    assert report.maximal_members == [VertexSet.full(3)]


@given(graphs(max_n=5))
@settings(max_examples=50)
def test_agrees_with_predicates(g: TwoColoredDigraph):
    report = enumerate_solutions(g)
    subsets = sorted(all_subsets(g.n), key=lambda s: s.sort_key)
    assert report.valid_solutions == [s for s in subsets if is_solution(g, s)]
    assert report.family_S_members == [s for s in subsets if is_in_family_S(g, s)]
    assert report.kernel_sets == [s for s in subsets if is_kernel(g, s)]


def test_exhaustive_small_graphs():
    for n in range(1, 3):
        for g in all_graphs(n):
            report = enumerate_solutions(g)
            assert len(report.valid_solutions) > 0
            assert solve(g).result in report.valid_solutions
            assert set(report.valid_solutions) <= set(report.family_S_members)
            assert set(report.maximal_members) <= set(report.valid_solutions)
            assert len(report.maximal_members) > 0


def test_maximal_members_are_solutions():
    rng = seeded_rng(41)
    gen = GraphGenerator(rng)
    for _ in range(100):
        g = gen.generate(int(rng.integers(1, 7)), 0.3, 0.3)
        report = enumerate_solutions(g)
        valid = set(report.valid_solutions)
        assert len(report.maximal_members) > 0
        assert all(s in valid for s in report.maximal_members)
        assert valid <= set(report.family_S_members)


def test_reachability_oracle():
    assert reachability_oracle(Relation.empty(3)) == Relation.empty(3)
    d = diagonal(VertexSet.full(3))
    assert reachability_oracle(d) == d
    assert reachability_oracle(Relation.from_pairs(3, [(0, 1), (1, 2)])) == \
           Relation.from_pairs(3, [(0, 1), (1, 2), (0, 2)])


@given(relations(max_n=8))
def test_reachability_oracle_property(r: Relation):
    assert reachability_oracle(r) == transitive_closure(r)


def test_reachability_oracle_random():
    rng = seeded_rng(42)
    gen = GraphGenerator(rng)
    for _ in range(500):
        n = int(rng.integers(0, 33))
        r = gen.relation(n, float(rng.choice([0.02, 0.05, 0.1, 0.3])))
        assert reachability_oracle(r) == transitive_closure(r)


@given(graphs(max_n=5))
@settings(max_examples=50)
def test_classify_single_set(g: TwoColoredDigraph):
    report = enumerate_solutions(g)
    for s in all_subsets(g.n):
        verdict = classify(g, s)
        assert verdict.is_solution == (s in report.valid_solutions)
        assert verdict.is_in_family_S == (s in report.family_S_members)
        assert verdict.is_kernel == (s in report.kernel_sets)


def test_edgeless_sixteen_vertices():
    n = 16
    start = time.perf_counter()
    report = enumerate_solutions(TwoColoredDigraph.from_pairs(n))
    assert time.perf_counter() - start < 30
    assert len(report.family_S_members) == 2 ** n - 1
    assert report.valid_solutions == [VertexSet.full(n)]
    assert report.maximal_members == [VertexSet.full(n)]
    assert report.kernel_sets == [VertexSet.full(n)]


def test_maximal_members_of_blue_path():
    report = enumerate_solutions(TwoColoredDigraph.from_pairs(3, blue=[(0, 1), (1, 2)]))
    assert report.family_S_members == [vs(3, 0), vs(3, 1), vs(3, 2)]
    assert report.maximal_members == [vs(3, 2)]
