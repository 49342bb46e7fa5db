from argparse import Namespace, ArgumentParser
from itertools import product
from sys import stdout
from typing import Iterator, Callable, Dict

from numpy.random import Generator, PCG64
from tqdm import tqdm

from ssw.config import params
from ssw.graph import GraphGenerator, TwoColoredDigraph, all_graphs, all_relations, \
    check_hypotheses, is_solution, is_in_family_S, is_kernel, transitive_colors
from ssw.log import get_logger
from ssw.oracle import enumerate_solutions, classify, reachability_oracle
from ssw.path import find_simple_path, simple_paths, splice, expand_asym_path, is_simple, all_l
from ssw.rel import VertexSet, Relation, transitive_closure, asym_part, sporder_check, has_cycle, \
    is_independent, le_set
from ssw.solve import Chain, SolveTrace, solve, chain_maximum, s_infinity, rc_relation, is_left_total, \
    upper_bound_check
from ssw.util import DomainError

args = Namespace()
logger = get_logger('ssw.sweep')

Check = Callable[[Generator], Iterator[bool]]


def _parse_args():
    global args
    p = ArgumentParser(description='Run property and oracle sweeps over many graphs.')
    p.add_argument('-c', '--check', type=str, nargs='*', choices=list(checks.keys()),
                   help='Sweeps to run. All sweeps are run if omitted.')
    p.add_argument('-n', '--number', type=int, default=1000,
                   help='Number of random instances of randomized sweeps.')
    p.add_argument('--max-n', type=int, default=params['oracle.sweep_vertices'],
                   help='Largest universe of exhaustive sweeps.')
    p.add_argument('-s', '--seed', type=int, default=42, help='Random seed.')
    args = p.parse_args()


def _trace_ok(g: TwoColoredDigraph, trace: SolveTrace):
    if not is_solution(g, trace.result):
        return False
    for a, b in zip(trace.chain.sets_[:-1], trace.chain.sets_[1:]):
        if not is_in_family_S(g, b) or a == b or not le_set(g.blue_order, a, b):
            return False
    return trace.iterations <= 2 ** g.n


def _chain_ok(c: Chain):
    return s_infinity(c) == chain_maximum(c) and upper_bound_check(c) and \
        is_left_total(rc_relation(c), c.union)


def exhaustive_theorem(_: Generator):
    for n in range(1, args.max_n + 1):
        for g in all_graphs(n):
            trace = solve(g)
            yield classify(g, trace.result).is_solution and _chain_ok(trace.chain)


def random_soundness(rng: Generator):
    gen = GraphGenerator(rng)
    for _ in range(args.number):
        n = int(rng.integers(1, 13))
        g = gen.generate(n, *rng.choice([0.1, 0.3, 0.6], size=2))
        trace = solve(g)
        yield _trace_ok(g, trace) and _chain_ok(trace.chain)


def kernel_corollary(rng: Generator):
    gen = GraphGenerator(rng)
    for _ in range(args.number // 2):
        g = transitive_colors(gen.generate(int(rng.integers(1, 13)), 0.2, 0.2))
        yield is_kernel(g, solve(g).result)


def sporder(rng: Generator):
    gen = GraphGenerator(rng)
    for _ in range(args.number // 2):
        n = int(rng.integers(1, 33))
        r = gen.relation(n, float(rng.choice([0.05, 0.1, 0.3])))
        order = asym_part(transitive_closure(r))
        yield sporder_check(order).is_sporder and has_cycle(order) is None


def poset_laws(rng: Generator):
    gen = GraphGenerator(rng)
    for _ in range(args.number // 10):
        n = int(rng.integers(1, 6))
        order = asym_part(transitive_closure(gen.relation(n, 0.4)))
        indep = [VertexSet.of(n, [v for v in range(n) if (code >> v) & 1])
                 for code in range(2 ** n)]
        indep = [s for s in indep if is_independent(order, s)]
        le = {(a, b): le_set(order, a, b) for a, b in product(indep, repeat=2)}
        ok = all(le[a, a] for a in indep)
        ok &= all(a == b for (a, b), v in le.items() if v and le[b, a])
        ok &= all(le[a, c] for a, b, c in product(indep, repeat=3) if le[a, b] and le[b, c])
        yield ok


def simple_path_equivalence(_: Generator):
    for n in range(1, args.max_n + 2):
        for r in all_relations(n):
            closure = transitive_closure(r)
            yield all((find_simple_path(r, x, y) is not None) == ((x, y) in closure)
                      for x, y in product(range(n), repeat=2) if x != y)


def _splice_ok(r: Relation):
    asym = asym_part(transitive_closure(r))
    for x, y in asym.pairs:
        for z in asym.successors(y):
            for px in simple_paths(r, x, y):
                for py in simple_paths(r, y, z):
                    # Postconditions are checked inside and violations raise
                    splice(r, x, y, z, px, py)
    return True


def splice_expansion(rng: Generator):
    for n in range(1, args.max_n + 2):
        for r in all_relations(n):
            yield _splice_ok(r)
    gen = GraphGenerator(rng)
    for _ in range(args.number):
        n = int(rng.integers(1, 9))
        r = gen.relation(n, float(rng.choice([0.15, 0.3, 0.5])))
        # Relations on 5 vertices are sampled, not enumerated
        if n == 5:
            yield _splice_ok(r)
        order = asym_part(transitive_closure(r))
        w = [int(rng.integers(n))]
        while len(order.successors(w[-1])) > 0:
            w.append(int(rng.choice(order.successors(w[-1]))))
        path = expand_asym_path(r, w)
        yield path[0] == w[0] and is_simple(path) and all_l(r, path) and len(path) >= len(w)


def worked_example(_: Generator):
    n = 10
    blue = [(i, i + 1) for i in range(n - 1)] + [(i + 1, i) for i in range(n - 1)]
    g = TwoColoredDigraph.from_pairs(n, blue=blue)
    report = check_hypotheses(g)
    yield report.blue_has_cycle is not None and report.blue_asym_acyclic and \
        report.red_asym_acyclic
    yield is_solution(g, solve(g).result)
    yield VertexSet.of(n, [0]) in enumerate_solutions(g).valid_solutions


def closure_exactness(rng: Generator):
    gen = GraphGenerator(rng)
    for _ in range(args.number // 2):
        n = int(rng.integers(0, 33))
        r = gen.relation(n, float(rng.choice([0.02, 0.05, 0.1, 0.3])))
        yield reachability_oracle(r) == transitive_closure(r)


checks: Dict[str, Check] = {
    'theorem': exhaustive_theorem,
    'soundness': random_soundness,
    'kernel': kernel_corollary,
    'sporder': sporder,
    'poset': poset_laws,
    'simple-path': simple_path_equivalence,
    'splice': splice_expansion,
    'example': worked_example,
    'closure': closure_exactness,
}


def main():
    num_failed = 0
    for name in args.check or list(checks.keys()):
        # Run one sweep
        rng = Generator(PCG64(seed=args.seed))
        progress = tqdm(checks[name](rng), desc=name, file=stdout)
        failed = 0
        progress.set_postfix_str(str(failed))
        try:
            for ok in progress:
                if not ok:
                    failed += 1
                    progress.set_postfix_str(str(failed))
        except DomainError as err:
            logger.error(f'{name}: {err}')
            failed += 1
        progress.close()
        num_failed += failed
    logger.info(f'{num_failed} failure(s).')
    return 0 if num_failed == 0 else 1


if __name__ == '__main__':
    _parse_args()
    exit(main())
