"""Approximation algorithms for dense Max 2-CSPs, free games, projection
games on random bipartite graphs, and densest k-subgraph.

The heavy lifting lives in the compiled extension; reports come back as
deterministic JSON strings with exact "num/den" values.
"""

from densecsp._core import (
    BudgetError,
    Instance,
    ValidationError,
    approx_free_game,
    brute_force_csp,
    brute_force_dks,
    decode_projection,
    density,
    evaluate,
    generate_projection_game,
    petersen_graph,
    planted_complete_instance,
    planted_dense_instance,
    qptas_dense,
    random_free_game,
    solve_complete,
    solve_dense,
    solve_dks,
    solve_projection,
    square_game,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Instance",
    "ValidationError",
    "approx_free_game",
    "brute_force_csp",
    "brute_force_dks",
    "decode_projection",
    "density",
    "evaluate",
    "generate_projection_game",
    "petersen_graph",
    "planted_complete_instance",
    "planted_dense_instance",
    "qptas_dense",
    "random_free_game",
    "solve_complete",
    "solve_dense",
    "solve_dks",
    "solve_projection",
    "square_game",
    "validate",
    "__version__",
]
