"""Minimum profile of graphs: exact solvers, bridge kernels and ordering rewrites."""

from types import ModuleType as _ModuleType

from .decomposition import (
    BridgeInfo,
    ChainDecomposition,
    EarDecomposition,
    bridge_order,
    bridgeless_components,
    chain_decomposition,
    check_ear_decomposition,
    ear_decomposition,
    find_bridges,
    is_two_edge_connected,
)
from .errors import (
    BudgetExhaustedError,
    CapacityError,
    InvalidGraphError,
    InvalidOrderingError,
    NotABridgeError,
    NotAChainError,
    NotConnectedError,
    NotTwoEdgeConnectedError,
    ParseError,
    PreconditionError,
    ProfileError,
    RuleNotApplicableError,
    SwapRefusedError,
)
from .graph_core import (
    Graph,
    Ordering,
    ProfileReport,
    WeightedGraph,
    edge_lengths,
    expand,
    expand_ordering,
    is_conformal,
    is_special,
    profile_by_edge_lengths,
    profile_by_prefix_boundary,
    profile_of_ordering,
    weighted_profile,
)
from .kernelization import (
    KernelResult,
    KernelTrace,
    LiftResult,
    PendantMerge,
    Suppression,
    apply_rule1,
    apply_rule2,
    is_k_suppressible,
    kernelize,
    lift_ordering,
)
from .ordering_transforms import (
    BlockPartition,
    ConsecutivePair,
    conformalize,
    consecutive_pair,
    cut_counts,
    normalize_blocks,
    swap_consecutive,
)
from .solvers import (
    Decision,
    IntervalModel,
    SolveResult,
    SolverConfig,
    decide_pavgv,
    exact_profile,
    exact_weighted_profile,
    interval_supergraph,
    lower_bound,
    profile,
)

__all__ = [name for name, obj in dict(globals()).items() if not name.startswith("_") and not isinstance(obj, _ModuleType)]
