import json
from typing import NamedTuple, List, Dict, Any

from .graph import TwoColoredDigraph, Color, HypothesisReport, mono_path
from .path import all_l
from .rel import VertexSet, Path
from .solve import SolveTrace
from .util import DomainError, CodeBuffer


class CertificateError(DomainError):
    pass


class Certificate(NamedTuple):
    """
    Monochromatic path from a vertex outside the independent set into it.
    """
    vertex: int
    color: Color
    path: Path


def certify(g: TwoColoredDigraph, s: VertexSet) -> List[Certificate]:
    certs = []
    for x in g.universe_.vertices:
        if x in s:
            continue
        found = mono_path(g, x, s)
        if found is None:
            raise CertificateError(f'Vertex {x} does not reach {s} by a monochromatic path.')
        color, path = found
        if not (path[0] == x and path[-1] in s and all_l(g.edges(color), path)):
            raise CertificateError(f'Certificate {path} of vertex {x} is invalid.')
        certs.append(Certificate(x, color, path))
    return certs


def result_document(g: TwoColoredDigraph, trace: SolveTrace, report: HypothesisReport) \
        -> Dict[str, Any]:
    return {
        'independent_set': trace.result.members,
        'certificates': [
            {'vertex': c.vertex, 'color': c.color.value, 'path': c.path}
            for c in certify(g, trace.result)
        ],
        'trace': {
            'iterations': trace.iterations,
            'chain_sizes': [len(s) for s in trace.chain],
        },
        'hypotheses': report._asdict(),
    }


def fmt_document(doc: Dict[str, Any], as_json: bool) -> str:
    """
    Format a result document as JSON or as an indented `key: value` text.
    """
    if as_json:
        return json.dumps(doc, indent=2) + '\n'
    buf = CodeBuffer()
    _write_value(buf, doc)
    return str(buf)


def _write_value(buf: CodeBuffer, v: Any):
    if isinstance(v, dict):
        for key, item in v.items():
            if isinstance(item, (dict, list)) and not _is_flat(item):
                buf.writeln(f'{key}:')
                with buf.indent():
                    _write_value(buf, item)
            else:
                buf.write(f'{key}: ')
                _write_scalar(buf, item)
                buf.writeln()
    elif isinstance(v, list):
        for item in v:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                buf.writeln('-')
                with buf.indent():
                    _write_value(buf, item)
            else:
                buf.write('- ')
                _write_scalar(buf, item)
                buf.writeln()
    else:
        _write_scalar(buf, v)
        buf.writeln()


def _is_flat(v: Any):
    return isinstance(v, list) and all(not isinstance(e, (dict, list)) for e in v)


def _write_scalar(buf: CodeBuffer, v: Any):
    if isinstance(v, list):
        buf.write_pos(map(lambda e: lambda: _write_scalar(buf, e), v))
    elif v is None:
        buf.write('none')
    elif isinstance(v, bool):
        buf.write(str(v).lower())
    else:
        buf.write(str(v))
