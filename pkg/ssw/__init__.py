from .rel import *
from .graph import GraphError, Color, TwoColoredDigraph, HypothesisReport, mono, \
    check_hypotheses, is_in_family_S, absorbed_complement, is_solution, is_kernel, mono_path, \
    transitive_colors, is_transitive_graph, random_graph, parse_graph, render_graph, render_dot
from .path import PathError, all_l, find_simple_path, simple_paths, loop_erase, splice, \
    expand_asym_path
from .solve import SolveError, SolveTrace, Chain, seed, t_m, grow_step, solve, find_kernel, \
    s_infinity, rc_relation, is_left_total, upper_bound_check
from .oracle import OracleError, OracleReport, Verdict, enumerate_solutions, classify, \
    reachability_oracle
from .util import DomainError
