import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from typing import List, Optional, Dict, Any, Callable

from .cert import result_document, fmt_document
from .config import params
from .graph import TwoColoredDigraph, Color, GraphFormatError, parse_graph, render_graph, \
    render_dot, random_graph, check_hypotheses, is_solution, is_in_family_S, is_kernel
from .log import get_logger, set_level
from .oracle import enumerate_solutions
from .path import expand_asym_path
from .rel import VertexSet, Path
from .solve import SolveError, solve
from .util import DomainError, map_opt

logger = get_logger(__name__)


def vertex_list(s: str) -> Path:
    try:
        return [int(v) for v in s.split(',') if len(v.strip()) > 0]
    except ValueError:
        raise ArgumentTypeError(f'\'{s}\' is not a comma-separated vertex list.')


def _build_parser():
    p = ArgumentParser(prog='ssw', description='Independent sets absorbing every vertex by '
                                               'monochromatic paths in two-colored digraphs.')
    p.add_argument('-v', '--verbose', action='store_true', help='Log debug messages.')
    sub = p.add_subparsers(dest='command', required=True)

    def graph_cmd(name: str, help_str: str):
        c = sub.add_parser(name, help=help_str)
        c.add_argument('graph', type=str, help='Graph file, or - for standard input.')
        c.add_argument('--json', action='store_true', help='Print the document as JSON.')
        return c

    graph_cmd('solve', 'Compute an absorbing independent set with certificates.')
    c = graph_cmd('verify', 'Check a vertex set against the solution, family and kernel '
                            'predicates.')
    c.add_argument('--set', type=vertex_list, required=True, help='Comma-separated vertices.')
    graph_cmd('oracle', 'Classify all vertex subsets by brute force.')
    graph_cmd('check-hypotheses', 'Report cycles of colors and of their strict orders.')
    graph_cmd('closure', 'Print transitive closures of both colors and their union.')
    c = graph_cmd('expand-path', 'Expand a path of the strict order of a color into a simple '
                                 'path of that color.')
    c.add_argument('--color', type=str, choices=[col.value for col in Color], required=True,
                   help='Color of the relation.')
    c.add_argument('--path', type=vertex_list, required=True, help='Comma-separated waypoints.')
    c = sub.add_parser('export-dot', help='Export graph in DOT format.')
    c.add_argument('graph', type=str, help='Graph file, or - for standard input.')
    c.add_argument('--set', type=vertex_list, help='Vertices to highlight.')
    c.add_argument('-o', '--output', type=str, help='Output file.')
    c = sub.add_parser('gen', help='Generate a random graph file.')
    c.add_argument('--n', type=int, required=True, help='Number of vertices.')
    c.add_argument('--blue', type=float, default=params['gen.blue_density'],
                   help='Probability of a blue edge on each ordered pair.')
    c.add_argument('--red', type=float, default=params['gen.red_density'],
                   help='Probability of a red edge on each ordered pair.')
    c.add_argument('--seed', type=int, default=params['gen.seed'], help='Random seed.')
    c.add_argument('-o', '--output', type=str, help='Output file.')
    return p


def run_cli(argv: Optional[List[str]] = None) -> int:
    """
    Run a command. The structured document goes to standard output and the human-readable
    summary to standard error.

    :return: 0 on success, 1 on domain errors and 2 on usage errors.
    """
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    root = get_logger('ssw')
    prev_level = root.level
    if args.verbose:
        set_level('debug')
    try:
        _commands[args.command](args)
    except DomainError as err:
        logger.error(str(err))
        return 1
    except OSError as err:
        logger.error(f'{err.strerror}: {err.filename}')
        return 1
    finally:
        root.setLevel(prev_level)
    return 0


def _read_graph(path: str) -> TwoColoredDigraph:
    if path == '-':
        try:
            return parse_graph(sys.stdin.read())
        except UnicodeDecodeError:
            raise GraphFormatError(1, 'Input is not valid UTF-8.')
    with open(path, 'rb') as f:
        return parse_graph(_decode(f.read()))


def _decode(data: bytes) -> str:
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as err:
        line = data[:err.start].count(b'\n') + 1
        raise GraphFormatError(line, f'Byte 0x{data[err.start]:02x} is not valid UTF-8.')


def _write_text(text: str, output: Optional[str]):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, 'w') as f:
            f.write(text)


def _print_doc(args: Namespace, doc: Dict[str, Any]):
    sys.stdout.write(fmt_document(doc, args.json))


def _set_of(g: TwoColoredDigraph, vs: Path) -> VertexSet:
    return VertexSet.of(g.universe_, vs)


def _cmd_solve(args: Namespace):
    g = _read_graph(args.graph)
    trace = solve(g)
    _print_doc(args, result_document(g, trace, check_hypotheses(g)))
    logger.info(f'Found independent set of {len(trace.result)} vertex(es) in '
                f'{trace.iterations} growth iteration(s).')


def _cmd_verify(args: Namespace):
    g = _read_graph(args.graph)
    if g.n == 0:
        raise SolveError('empty vertex set (Assumption A1)')
    s = _set_of(g, args.set)
    doc = {
        'set': s.members,
        'is_solution': is_solution(g, s),
        'is_in_family_S': is_in_family_S(g, s),
        'is_kernel': is_kernel(g, s),
    }
    _print_doc(args, doc)
    logger.info(f'{s} is {"" if doc["is_solution"] else "not "}a solution.')


def _cmd_oracle(args: Namespace):
    g = _read_graph(args.graph)
    report = enumerate_solutions(g)
    _print_doc(args, {k: [s.members for s in sets] for k, sets in report._asdict().items()})
    logger.info(f'{len(report.valid_solutions)} valid solution(s) among {2 ** g.n} subsets.')


def _cmd_check_hypotheses(args: Namespace):
    g = _read_graph(args.graph)
    report = check_hypotheses(g)
    _print_doc(args, report._asdict())
    if report.blue_has_cycle is not None or report.red_has_cycle is not None:
        logger.info('A color has a cycle; only the strict order hypotheses hold.')


def _cmd_closure(args: Namespace):
    g = _read_graph(args.graph)
    _print_doc(args, {
        'blue_closure': [list(p) for p in g.eb_plus.pairs],
        'red_closure': [list(p) for p in g.er_plus.pairs],
        'mono': [list(p) for p in g.mono.pairs],
    })


def _cmd_expand_path(args: Namespace):
    g = _read_graph(args.graph)
    path = expand_asym_path(g.edges(Color(args.color)), args.path)
    _print_doc(args, {'waypoints': args.path, 'path': path})


def _cmd_export_dot(args: Namespace):
    g = _read_graph(args.graph)
    s = map_opt(lambda vs: _set_of(g, vs), args.set)
    _write_text(render_dot(g, s), args.output)


def _cmd_gen(args: Namespace):
    g = random_graph(args.n, args.blue, args.red, args.seed)
    _write_text(render_graph(g), args.output)
    logger.info(f'Generated graph with {g.n} vertices, {len(g.eb_)} blue and {len(g.er_)} red '
                f'edge(s).')


_commands: Dict[str, Callable[[Namespace], None]] = {
    'solve': _cmd_solve,
    'verify': _cmd_verify,
    'oracle': _cmd_oracle,
    'check-hypotheses': _cmd_check_hypotheses,
    'closure': _cmd_closure,
    'expand-path': _cmd_expand_path,
    'export-dot': _cmd_export_dot,
    'gen': _cmd_gen,
}
