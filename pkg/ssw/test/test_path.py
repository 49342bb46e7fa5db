from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from ssw.graph import GraphGenerator, all_relations
from ssw.path import PathError, is_simple, all_l, find_simple_path, simple_paths, loop_erase, \
    splice, expand_asym_path
from ssw.rel import Relation, transitive_closure, asym_part
from .strategies import relations, seeded_rng, greedy_asym_chain


def rel(n, *pairs):
    return Relation.from_pairs(n, pairs)


def test_all_l():
    r = rel(3, (0, 1), (1, 2))
    assert all_l(r, [1])
    assert all_l(r, [0, 1, 2])
    assert not all_l(r, [0, 2])
    with pytest.raises(PathError):
        all_l(r, [])


def test_find_simple_path():
    assert find_simple_path(rel(2, (0, 1)), 0, 1) == [0, 1]
    assert find_simple_path(rel(3, (0, 1)), 0, 2) is None
    assert find_simple_path(rel(4, (0, 1), (1, 2), (2, 3), (0, 2)), 0, 3) == [0, 2, 3]
    with pytest.raises(PathError, match='use cycle query'):
        find_simple_path(rel(2, (0, 0)), 0, 0)


def test_find_simple_path_exhaustive():
    for n in range(4):
        for r in all_relations(n):
            closure = transitive_closure(r)
            for x in range(n):
                for y in range(n):
                    if x == y:
                        continue
                    p = find_simple_path(r, x, y)
                    assert (p is not None) == ((x, y) in closure)
                    if p is not None:
                        assert p[0] == x and p[-1] == y
                        assert is_simple(p) and all_l(r, p)


def test_find_simple_path_random():
    rng = seeded_rng(3)
    gen = GraphGenerator(rng)
    for _ in range(200):
        n = int(rng.integers(2, 17))
        r = gen.relation(n, 1.5 / n)
        closure = transitive_closure(r)
        x, y = (int(v) for v in rng.choice(n, size=2, replace=False))
        assert (find_simple_path(r, x, y) is not None) == ((x, y) in closure)


def test_simple_paths():
    r = rel(4, (0, 1), (0, 2), (1, 2), (1, 3), (2, 1), (2, 3))
    assert list(simple_paths(r, 0, 3)) == [[0, 1, 2, 3], [0, 1, 3], [0, 2, 1, 3], [0, 2, 3]]
    assert list(simple_paths(r, 3, 0)) == []


@given(relations(min_n=2, max_n=5))
def test_simple_paths_brute_force(r: Relation):
    n = r.universe_.n_
    expected = []
    for k in range(n - 1):
        for mid in permutations(range(2, n), k):
            p = [0, *mid, 1]
            if all_l(r, p):
                expected.append(p)
    assert list(simple_paths(r, 0, 1)) == sorted(expected)


@given(relations(min_n=2, max_n=6))
def test_simple_path_endpoints_in_closure(r: Relation):
    closure = transitive_closure(r)
    n = r.universe_.n_
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            for p in simple_paths(r, x, y):
                assert (p[0], p[-1]) in closure


def test_loop_erase():
    assert loop_erase([0]) == [0]
    assert loop_erase([0, 1, 2, 1, 3]) == [0, 1, 3]
    assert loop_erase([0, 1, 0]) == [0]
    assert loop_erase([0, 1, 2, 3, 1, 4, 2, 5]) == [0, 1, 4, 2, 5]
    with pytest.raises(PathError):
        loop_erase([])


@given(st.lists(st.integers(0, 5), min_size=1, max_size=20))
def test_loop_erase_properties(walk):
    steps = set(zip(walk[:-1], walk[1:]))
    path = loop_erase(walk)
    assert is_simple(path)
    assert path[0] == walk[0] and path[-1] == walk[-1]
    assert all(step in steps for step in zip(path[:-1], path[1:]))


def test_splice_identity():
    r = rel(5, (0, 1), (1, 2), (2, 3), (3, 4))
    res = splice(r, 0, 2, 4, [0, 1, 2], [2, 3, 4])
    assert res.y_new == 2 and res.x_part == [1] and res.y_part == [3]
    assert res.join(0, 4) == [0, 1, 2, 3, 4]


def test_splice_shared_interior():
    r = rel(4, (0, 1), (1, 2), (2, 1), (1, 3))
    res = splice(r, 0, 2, 3, [0, 1, 2], [2, 1, 3])
    assert res.join(0, 3) == [0, 1, 3]
    assert res.y_new == 1 and res.x_part == [] and res.y_part == []


def test_splice_errors():
    r = rel(4, (0, 1), (1, 2), (2, 1), (1, 3))
    with pytest.raises(PathError):
        splice(r, 0, 2, 3, [0, 2], [2, 1, 3])
    with pytest.raises(PathError):
        splice(r, 0, 2, 3, [0, 1, 2, 1, 2], [2, 1, 3])
    with pytest.raises(PathError):
        splice(r, 0, 2, 3, [0, 1], [2, 1, 3])
    # 1 and 2 are on a common cycle
    with pytest.raises(PathError):
        splice(r, 0, 1, 2, [0, 1], [1, 2])


def _check_splice_exhaustive(r: Relation):
    n = r.universe_.n_
    asym = asym_part(transitive_closure(r))
    for x, y in asym.pairs:
        for z in asym.successors(y):
            for px in simple_paths(r, x, y):
                for py in simple_paths(r, y, z):
                    res = splice(r, x, y, z, px, py)
                    joined = res.join(x, z)
                    assert is_simple(joined) and all_l(r, joined)
                    assert px[1:1 + len(res.x_part)] == res.x_part
                    assert (x, res.y_new) in asym and (res.y_new, z) in asym
                    if len(set(px[1:-1]) & set(py[1:-1])) == 0:
                        assert res == (px[1:-1], y, py[1:-1])
                    assert 0 <= res.y_new < n


def test_splice_exhaustive():
    for n in range(4):
        for r in all_relations(n):
            _check_splice_exhaustive(r)


def test_splice_random():
    rng = seeded_rng(5)
    gen = GraphGenerator(rng)
    for _ in range(100):
        _check_splice_exhaustive(gen.relation(5, float(rng.choice([0.2, 0.35, 0.5]))))


def test_expand_asym_path():
    r = rel(3, (0, 1), (1, 2))
    assert expand_asym_path(r, [2]) == [2]
    assert expand_asym_path(r, [0, 1]) == [0, 1]
    assert expand_asym_path(r, [0, 2]) == [0, 1, 2]
    with pytest.raises(PathError):
        expand_asym_path(r, [])
    with pytest.raises(PathError):
        expand_asym_path(r, [2, 0])
    with pytest.raises(PathError):
        expand_asym_path(rel(2, (0, 1), (1, 0)), [0, 1])


def test_expand_through_cycles():
    # Waypoints 0 < 3 < 6 are joined through the cycles {1, 2} and {4, 5}
    r = rel(7, (0, 1), (1, 2), (2, 1), (2, 3), (3, 4), (4, 5), (5, 4), (5, 6), (1, 3))
    w = [0, 3, 6]
    path = expand_asym_path(r, w)
    assert path[0] == 0 and is_simple(path) and all_l(r, path)
    assert len(path) >= len(w)


def _check_expansion(r: Relation, w):
    path = expand_asym_path(r, w)
    assert path[0] == w[0]
    assert is_simple(path) and all_l(r, path)
    assert len(path) >= len(w)


def test_expand_random():
    rng = seeded_rng(6)
    gen = GraphGenerator(rng)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        r = gen.relation(n, float(rng.choice([0.15, 0.3, 0.5])))
        for start in range(n):
            _check_expansion(r, greedy_asym_chain(r, start))


def test_expand_random_dag():
    rng = seeded_rng(8)
    gen = GraphGenerator(rng)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        mat = gen.relation(n, 0.4).mat_.copy()
        for x in range(n):
            mat[x, :x + 1] = False
        r = Relation(n, mat)
        order = asym_part(transitive_closure(r))
        for start in range(n):
            w = greedy_asym_chain(r, start)
            _check_expansion(r, w)
            # Any ascending sub-sequence is a path of the order as well
            if len(w) > 2:
                sub = w[::2]
                assert all_l(order, sub)
                _check_expansion(r, sub)
