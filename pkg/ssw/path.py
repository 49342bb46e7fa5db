from collections import deque
from typing import Optional, List, Dict, Iterator, NamedTuple, Tuple

from .config import params
from .rel import Relation, Path, transitive_closure, asym_part
from .util import DomainError

max_enum: int = params['path.max_enum']


class PathError(DomainError):
    """
    Path operation is applied to an input violating its precondition.
    """
    pass


def is_simple(p: Path):
    return len(set(p)) == len(p)


def all_l(r: Relation, p: Path) -> bool:
    """
    Whether successive elements of a vertex sequence are related by `r`.
    """
    if len(p) == 0:
        raise PathError('Path is empty.')
    return all((u, v) in r for u, v in zip(p[:-1], p[1:]))


def find_simple_path(r: Relation, x: int, y: int) -> Optional[Path]:
    """
    Find a duplicate-free `r`-path from `x` to `y`. Such path exists iff `(x, y)` is in the
    transitive closure of `r`. Breadth-first search is used, so the path is a shortest one, and
    successors are visited in ascending order.
    """
    r.universe_.check_vertex(x)
    r.universe_.check_vertex(y)
    if x == y:
        raise PathError('Endpoints are equal, use cycle query.')
    parent: Dict[int, int] = {x: x}
    queue = deque([x])
    while len(queue) > 0:
        u = queue.popleft()
        for w in r.successors(u):
            if w in parent:
                continue
            parent[w] = u
            if w == y:
                path = [y]
                while path[-1] != x:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    return None


def simple_paths(r: Relation, x: int, y: int) -> Iterator[Path]:
    """
    Enumerate duplicate-free `r`-paths from `x` to `y` in lexicographic order. At most
    `params['path.max_enum']` paths are produced.
    """
    r.universe_.check_vertex(x)
    r.universe_.check_vertex(y)
    if x == y:
        raise PathError('Endpoints are equal, use cycle query.')
    count = 0
    stack: List[Tuple[int, Iterator[int]]] = [(x, iter(r.successors(x)))]
    path = [x]
    on_path = {x}
    while len(stack) > 0 and count < max_enum:
        _, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            on_path.remove(path.pop())
            continue
        if w in on_path:
            continue
        if w == y:
            count += 1
            yield path + [y]
            continue
        path.append(w)
        on_path.add(w)
        stack.append((w, iter(r.successors(w))))


def loop_erase(walk: Path) -> Path:
    """
    Chronological loop erasure: whenever the walk revisits a vertex, the loop since its last
    visit is cut off. Result is a duplicate-free path with the same endpoints.
    """
    if len(walk) == 0:
        raise PathError('Walk is empty.')
    path: Path = []
    pos: Dict[int, int] = {}
    for v in walk:
        if v in pos:
            for u in path[pos[v] + 1:]:
                del pos[u]
            del path[pos[v] + 1:]
        else:
            pos[v] = len(path)
            path.append(v)
    return path


class SpliceResult(NamedTuple):
    x_part: Path
    y_new: int
    y_part: Path

    def join(self, x: int, z: int) -> Path:
        return [x] + self.x_part + [self.y_new] + self.y_part + [z]


def splice(r: Relation, x: int, y: int, z: int, px: Path, py: Path) -> SpliceResult:
    """
    Repair the concatenation of two simple `r`-paths `x -> y` and `y -> z` into a simple path
    `x -> y' -> z` while keeping `y'` strictly between `x` and `z` in the asymmetric part of the
    transitive closure.

    Candidates are the unchanged concatenation (only valid when interiors are disjoint) and, for
    every interior vertex `v` of `px` shared with the interior of `py`, the prefix of `px` before
    `v`, then `v` itself, then the suffix of `py` after `v`. The shortest duplicate-free candidate
    wins, ties broken lexicographically by vertex sequence.

    :return: Interior part before `y'` (a prefix, hence a subsequence, of the interior of `px`),
        `y'` and the interior part after `y'`.
    """
    asym = asym_part(transitive_closure(r))
    _check_splice_input(r, asym, x, y, z, px, py)

    # Collect candidates
    px_in, py_in = px[1:-1], py[1:-1]
    cands: List[SpliceResult] = []
    if len(set(px_in) & set(py_in)) == 0:
        cands.append(SpliceResult(list(px_in), y, list(py_in)))
    py_pos = {v: j for j, v in enumerate(py_in)}
    for i, v in enumerate(px_in):
        if v not in py_pos:
            continue
        cand = SpliceResult(list(px_in[:i]), v, list(py_in[py_pos[v] + 1:]))
        if is_simple(cand.join(x, z)):
            cands.append(cand)
    if len(cands) == 0:
        raise PathError('No duplicate-free splice found.')
    result = min(cands, key=lambda c: (len(c.join(x, z)), c.join(x, z)))

    # Check postconditions
    joined = result.join(x, z)
    if not (is_simple(joined) and all_l(r, joined) and (x, result.y_new) in asym and
            (result.y_new, z) in asym):
        raise PathError('Splice invariant violated.')

    return result


def _check_splice_input(r: Relation, asym: Relation, x: int, y: int, z: int, px: Path,
                        py: Path):
    for name, p, (src, dst) in [('px', px, (x, y)), ('py', py, (y, z))]:
        if len(p) < 2 or p[0] != src or p[-1] != dst:
            raise PathError(f'{name} does not join {src} to {dst}.')
        if not is_simple(p):
            raise PathError(f'{name} is not duplicate-free.')
        if not all_l(r, p):
            raise PathError(f'{name} is not a path of the relation.')
    if (x, y) not in asym or (y, z) not in asym:
        raise PathError('Waypoints are not ascending in the asymmetric part of the closure.')


def expand_asym_path(r: Relation, w: Path) -> Path:
    """
    Turn a simple path of the asymmetric part of the transitive closure into a simple path of
    `r` with at least as many vertices, starting at the same vertex.

    Consecutive waypoints are joined by shortest paths and repaired with `splice`, after which
    the walk is loop-erased. Each anchor visited by the walk is strictly above the previous one
    in the asymmetric closure, so they lie in distinct strongly connected components and each
    component keeps at least one vertex after loop erasure.
    """
    if len(w) == 0:
        raise PathError('Path is empty.')
    asym = asym_part(transitive_closure(r))
    if not is_simple(w):
        raise PathError('Waypoints are not duplicate-free.')
    if not all_l(asym, w):
        raise PathError('Waypoints are not ascending in the asymmetric part of the closure.')
    if len(w) == 1:
        return list(w)

    # Splice consecutive waypoint triples
    walk = [w[0]]
    anchor = w[0]
    for y, z in zip(w[1:-1], w[2:]):
        px = find_simple_path(r, anchor, y)
        py = find_simple_path(r, y, z)
        res = splice(r, anchor, y, z, px, py)
        walk.extend(res.x_part)
        walk.append(res.y_new)
        anchor = res.y_new
    walk.extend(find_simple_path(r, anchor, w[-1])[1:])

    # Remove remaining loops
    path = loop_erase(walk)
    if not (path[0] == w[0] and all_l(r, path) and len(path) >= len(w)):
        raise PathError('Expansion invariant violated.')
    return path
