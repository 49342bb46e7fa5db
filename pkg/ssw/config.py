from typing import Dict, Any

params: Dict[str, Any] = {
    # Maximal number of vertices accepted by the subset-enumeration oracle
    'oracle.max_vertices': 20,
    # Maximal number of vertices of exhaustive-coloring sweeps
    'oracle.sweep_vertices': 3,

    # Maximal number of growth iterations. `None` means 2 ** n.
    'solver.max_iter': None,
    # Whether to check postconditions of each growth step
    'solver.check_trace': True,

    # Maximal number of simple paths enumerated between two vertices
    'path.max_enum': 10000,

    # Default seed of random graph generation
    'gen.seed': 42,
    # Default probability of a blue edge between an ordered pair of vertices
    'gen.blue_density': 0.3,
    # Default probability of a red edge between an ordered pair of vertices
    'gen.red_density': 0.3,

    # Default logging level
    'log.level': 'info',
}
