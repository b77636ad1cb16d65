"""Generic ranks, gadget formulas, peeling and threshold bounds for quantum k-SAT."""

from ._core import (
    BoundReport,
    EmpiricalBound,
    Hypergraph,
    NumericalInstability,
    RankResult,
    attach,
    disjoint_union,
    general_k_bound,
    k2_rank,
    nosegay3_rank,
    nosegay_bound,
    nosegay_hang_rank,
    nosegay_k_rank,
    nosegay_ode,
    peel,
    peel_trace_csv,
    random_hypergraph,
    rank_field,
    rank_float,
    single_clause_bound,
    single_clause_threshold,
    solve_b,
    sunflower_bound,
    sunflower_degree_density,
    sunflower_rank,
    threshold,
)

__version__ = "0.1.0"
