from .chain import ChainError, Chain, chain_maximum, s_infinity, rc_relation, is_left_total, \
    upper_bound_check
from .solver import SolveError, SolveTrace, SSWSolver, seed, t_m, grow_step, solve, find_kernel
