from .base import Universe, VertexSet, Relation, RelationError, Path, check_universe
from .calc import BoolOp, boolean_ops, compose, power, transitive_closure, \
    reflexive_transitive_closure, diagonal, restrict, foreset, afterset, asym_part, \
    is_independent, le_set, is_transitive, is_symmetric, is_reflexive, SporderReport, \
    sporder_check, has_cycle
