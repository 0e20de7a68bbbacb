"""Best swap edges and critical sets of tree spanners in unweighted graphs."""

from .bestswap import BestSwapRow, all_best_swap_edges, best_swaps_for_edge
from .critical import (
    CriticalSetResult,
    PairAssignment,
    check_claim15,
    compute_pairs,
    construct_critical_set,
    critical_edges_of,
    is_critical_set,
    lemma_check,
    min_critical_set,
    min_critical_set_size,
    phi,
    proof_trace,
)
from .graphcore import (
    CutContext,
    Graph,
    OrientedSwapEdge,
    SpanningTree,
    build_graph,
    build_spanning_tree,
    is_two_edge_connected,
    split_cut,
    subtree_split,
)
from .instances import (
    GenSpec,
    enumerate_instances,
    export_dot,
    gen_graph,
    gen_tree,
    read_instance,
    write_instance,
)
from .stretch import (
    SwapEvaluation,
    detour_value,
    stretch_factor,
    swap_stretch_fast,
    swap_stretch_oracle,
    swap_tree,
)

__version__ = "0.1.0"
