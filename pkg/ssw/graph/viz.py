from typing import Optional

from graphviz import Digraph

from .base import TwoColoredDigraph, Color
from ..rel import VertexSet, check_universe

edge_colors = {
    Color.BLUE: 'blue',
    Color.RED: 'red',
}


def render_dot(g: TwoColoredDigraph, s: Optional[VertexSet] = None, name: str = 'G') -> str:
    """
    Describe a two-colored digraph in DOT. Members of `s` are drawn as filled double circles.
    """
    return GraphVisualizer(name).visualize(g, s).source


class GraphVisualizer:
    def __init__(self, name: str):
        self._viz = Digraph(
            name=name,
            format='pdf',
            node_attr={
                'shape': 'circle',
            }
        )

    def visualize(self, g: TwoColoredDigraph, s: Optional[VertexSet]):
        if s is not None:
            check_universe(g.eb_, s)
        for v in g.universe_.vertices:
            if s is not None and v in s:
                self._viz.node(str(v), shape='doublecircle', style='filled',
                               fillcolor='lightgrey')
            else:
                self._viz.node(str(v))
        for color in Color:
            for u, v in g.edges(color).pairs:
                self._viz.edge(str(u), str(v), color=edge_colors[color])
        return self._viz

