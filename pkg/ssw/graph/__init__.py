from .base import GraphError, Color, TwoColoredDigraph, HypothesisReport, mono, \
    check_hypotheses, is_in_family_S, absorbed_complement, is_solution, is_kernel, mono_path, \
    transitive_colors, is_transitive_graph
from .gen import GraphGenerator, random_graph, all_relations, all_graphs
from .fmt import GraphFormatError, parse_graph, render_graph
from .viz import render_dot
