"""Parallel EF1 and EF(k) allocation of indivisible goods."""

from ._core import (
    Allocation,
    EnvyReport,
    InputError,
    Instance,
    ParseError,
    ef_eps_bound,
    ef_sqrt_bound,
    envy_count,
    gen,
    max_weight_matching,
    reduce_to_stable_matching,
    round_robin,
    round_robin_via_stable_matching,
    sample_permutation,
    set_threads,
    solve_const_agents,
    solve_ef_eps,
    solve_ef_sqrt,
    solve_graph,
    solve_hypergraph,
    solve_matching_rounds,
    solve_two_agent,
    verify_efk,
)

__all__ = [name for name in dir() if not name.startswith("_")]
