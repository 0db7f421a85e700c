"""Chain-decomposition reachability toolkit for DAGs.

Thin wrapper around the C++ core: constant-time reachability queries from a
chain-decomposition index, linear-time transitive-edge reduction, DAG width
via index-accelerated bipartite matching, and seeded random DAG generators.
"""

from ._chaindex import (  # noqa: F401
    ChainDecomposition,
    ConcatStats,
    CycleError,
    Dag,
    InputError,
    PreconditionError,
    ReachIndex,
    ReductionStats,
    WidthResult,
    __version__,
    build_index,
    concatenate,
    condense_sccs,
    decomposition_from_chains,
    dfs_reachable,
    er_p_for_degree,
    from_edge_list,
    fulkerson_width,
    gen_ba,
    gen_er,
    gen_pb,
    gen_ws,
    greedy_chains,
    load_edge_list,
    load_index,
    node_order_paths,
    reduce,
    reduce_incoming,
    reduce_outgoing,
    save_edge_list,
    save_index,
    sort_adjacency_lists,
)
