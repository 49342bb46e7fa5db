from typing import List, NamedTuple, Set, Tuple, Dict

import numpy as np

from .config import params
from .graph import TwoColoredDigraph
from .rel import Relation, VertexSet, check_universe
from .util import DomainError

max_vertices: int = params['oracle.max_vertices']

PairSet = Set[Tuple[int, int]]


class OracleError(DomainError):
    pass


class OracleReport(NamedTuple):
    valid_solutions: List[VertexSet]
    family_S_members: List[VertexSet]
    kernel_sets: List[VertexSet]
    # Members of the family with no other member strictly above them
    maximal_members: List[VertexSet]


def reachability_oracle(r: Relation) -> Relation:
    """
    Pairs `(x, y)` such that `y` is reachable from `x` in at least one step, computed by a graph
    search from every vertex.
    """
    return Relation.from_pairs(r.universe_, _reach(r))


def _reach(r: Relation) -> PairSet:
    succ: Dict[int, List[int]] = {v: r.successors(v) for v in r.universe_.vertices}
    pairs: PairSet = set()
    for x in r.universe_.vertices:
        seen: Set[int] = set()
        stack = list(succ[x])
        while len(stack) > 0:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ[v])
        pairs.update((x, y) for y in seen)
    return pairs


class _PairSets(NamedTuple):
    mono: PairSet
    red: PairSet
    edges: PairSet
    blue_order: PairSet


def _pair_sets(g: TwoColoredDigraph) -> _PairSets:
    blue, red = _reach(g.eb_), _reach(g.er_)
    return _PairSets(
        mono=blue | red,
        red=red,
        edges=set(g.eb_.pairs) | set(g.er_.pairs),
        blue_order={(x, y) for x, y in blue if (y, x) not in blue},
    )


class Verdict(NamedTuple):
    is_solution: bool
    is_in_family_S: bool
    is_kernel: bool


def _classify(n: int, ps: _PairSets, s: List[int]) -> Verdict:
    s_set = set(s)
    outside = [v for v in range(n) if v not in s_set]
    mono_indep = _independent(ps.mono, s)
    return Verdict(
        is_solution=n > 0 and len(s) > 0 and mono_indep and
                    all(any((v, t) in ps.mono for t in s) for v in outside),
        is_in_family_S=len(s) > 0 and mono_indep and
                       all(any((y, t) in ps.mono for t in s) for x, y in ps.red if x in s_set),
        is_kernel=_independent(ps.edges, s) and
                  all(any((v, t) in ps.edges for t in s) for v in outside),
    )


def classify(g: TwoColoredDigraph, s: VertexSet) -> Verdict:
    """
    Classify a single vertex set with the brute-force predicates.
    """
    check_universe(g.eb_, s)
    return _classify(g.n, _pair_sets(g), s.members)


def enumerate_solutions(g: TwoColoredDigraph) -> OracleReport:
    """
    Classify every vertex subset of a small graph by brute force. The predicates are evaluated
    on bit masks built from explicit pair sets, independently of the relation calculus, and
    vectorized over the integer codes of all subsets.
    """
    n = g.n
    if n > max_vertices:
        raise OracleError(f'oracle cap exceeded: {n} > {max_vertices} vertices')
    ps = _pair_sets(g)
    codes = np.arange(1 << n, dtype=np.int64)

    def hits(mask: int) -> np.ndarray:
        return (codes & mask) != 0

    # Scan subsets
    mono, mono_strict = _masks(n, ps.mono), _masks(n, ps.mono, loops=False)
    edges, edges_strict = _masks(n, ps.edges), _masks(n, ps.edges, loops=False)
    red_pred = _masks(n, {(y, x) for x, y in ps.red})
    mono_indep = np.ones_like(codes, dtype=bool)
    edges_indep = mono_indep.copy()
    absorbed = mono_indep.copy()
    dominated = mono_indep.copy()
    red_closed = mono_indep.copy()
    for v in range(n):
        member = hits(1 << v)
        mono_hit = hits(mono[v])
        mono_indep &= ~member | ~hits(mono_strict[v])
        edges_indep &= ~member | ~hits(edges_strict[v])
        absorbed &= member | mono_hit
        dominated &= member | hits(edges[v])
        red_closed &= ~hits(red_pred[v]) | mono_hit
    nonempty = codes != 0
    family = nonempty & mono_indep & red_closed
    solutions = nonempty & mono_indep & absorbed
    kernels = edges_indep & dominated

    # Find maximal members of the family
    maximal = family & (_upper_counts(n, ps, codes, family) == 1)

    return OracleReport(*(_canonical(n, np.flatnonzero(sel))
                          for sel in (solutions, family, kernels, maximal)))


def _masks(n: int, rel: PairSet, loops: bool = True) -> List[int]:
    masks = [0] * n
    for x, y in rel:
        if loops or x != y:
            masks[x] |= 1 << y
    return masks


def _upper_counts(n: int, ps: _PairSets, codes: np.ndarray, family: np.ndarray) -> np.ndarray:
    """
    For every subset code `a`, count the family members `b` with `a <= b`. `a <= b` holds iff
    `a` is contained in the down-closure of `b`, so the counts are a superset sum over the
    down-closures of the members.
    """
    order = _masks(n, ps.blue_order)
    down = codes.copy()
    for x in range(n):
        down |= np.where((codes & order[x]) != 0, 1 << x, 0)
    counts = np.bincount(down[family], minlength=1 << n)
    for i in range(n):
        view = counts.reshape(-1, 2, 1 << i)
        view[:, 0, :] += view[:, 1, :]
    return counts


def _independent(rel: PairSet, s: List[int]):
    return not any((x, y) in rel for x in s for y in s if x != y)


def _canonical(n: int, codes: np.ndarray):
    sets = [[v for v in range(n) if (code >> v) & 1] for code in codes.tolist()]
    return [VertexSet.of(n, s) for s in sorted(sets, key=lambda s: (len(s), s))]
