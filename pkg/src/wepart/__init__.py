"""Weight-equitable partitions of undirected graphs.

A partition of the vertex set is weight-equitable when every vertex of a
cell sees the same Perron-weighted share of every cell.  The package
computes Perron data, decides (weight-) equitability three independent
ways, condenses graphs through partitions, handles joint partitions of
graph pairs and fractional-isomorphism witnesses, recognizes cographs via
cotrees with a fast pairing algorithm for 2-homogeneous partitions, and
ships exhaustive brute-force oracles plus a join-coarseness experiment
harness.
"""

__version__ = "0.1.0"

from .errors import (
    BadC,
    BadN,
    DimensionMismatch,
    DuplicateEdge,
    EmptyCell,
    EmptySet,
    GroundSetMismatch,
    HasFixedPoint,
    MalformedEdgeList,
    MalformedGraph6,
    NegativeEntry,
    NoConvergence,
    NoHomogeneousPartition,
    NoSuchAutomorphism,
    NotBalanced,
    NotCograph,
    NotConnected,
    NotInvolution,
    NotPermutation,
    NotSquare,
    NotSymmetric,
    NotTwoHomogeneous,
    NotWeightEquitable,
    NuNotCellConstant,
    OddOrder,
    Overlap,
    SeedRequired,
    SelfLoop,
    SpectralRadiusMismatch,
    TooLarge,
    Uncovered,
    VertexOutOfRange,
    WepartError,
)
from .graphs import (
    Graph,
    complement,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    induced_subgraph,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .partitions import (
    Partition,
    WeightedView,
    apply_automorphism,
    build_weighted_view,
    discrete_partition,
    format_partition,
    join,
    join_all,
    make_partition,
    meet,
    parse_partition,
    refines,
    trivial_partition,
)
from .spectral import PerronData, perron, spectral_radius, weight_degree
from .equitability import (
    IntersectionTable,
    b_operator,
    coarsest_equitable,
    is_B_invariant,
    is_equitable,
    is_weight_equitable,
    is_weight_equitable_commute,
    perron_constant_on_cells,
    quotient_eigen_check,
    scc_partition,
    weight_intersection_numbers,
)
from .joint import (
    JointContext,
    fractional_isomorphism_witness,
    is_balanced,
    make_joint_context,
    ratio_check,
    restriction,
)
from .perms import (
    check_permutation,
    compose,
    format_cycles,
    identity,
    inverse,
    is_automorphism,
    is_fixed_point_free,
    is_involution,
    order,
    power,
)
from .cotrees import (
    Cotree,
    CotreeNode,
    aut_generators,
    build_cotree,
    c_homogeneous_search,
    enumerate_connected_cographs,
    enumerate_connected_cotrees,
    has_nice_automorphism,
    nice_automorphism,
    pairs_partition,
    random_cotree,
    reconstruct,
    two_homogeneous_partition,
)
from .oracle import (
    EnumerationBudget,
    all_automorphisms,
    all_partitions,
    bell_number,
    enumerate_weight_equitable,
    find_fixed_point_free_involution,
    involution_to_partition,
    max_we_refinement,
    partition_to_involution,
)
from .experiment import (
    EnumeratedSource,
    ExperimentRecord,
    RandomSource,
    run_experiment,
    sample_partitions,
    subset_join,
    verify_record,
    write_histogram,
    write_metadata,
    write_records,
)

__all__ = [
    "__version__",
    "WepartError",
    "BadC", "BadN", "DimensionMismatch", "DuplicateEdge", "EmptyCell",
    "EmptySet", "GroundSetMismatch", "HasFixedPoint", "MalformedEdgeList",
    "MalformedGraph6", "NegativeEntry", "NoConvergence",
    "NoHomogeneousPartition", "NoSuchAutomorphism", "NotBalanced",
    "NotCograph", "NotConnected", "NotInvolution", "NotPermutation",
    "NotSquare", "NotSymmetric", "NotTwoHomogeneous", "NotWeightEquitable",
    "NuNotCellConstant", "OddOrder", "Overlap", "SeedRequired", "SelfLoop",
    "SpectralRadiusMismatch", "TooLarge", "Uncovered", "VertexOutOfRange",
    "Graph", "complement", "disjoint_union", "emit_edge_list", "emit_graph6",
    "induced_subgraph", "is_connected", "parse_edge_list", "parse_graph6",
    "KERNEL_BACKEND",
    "Partition", "WeightedView", "apply_automorphism", "build_weighted_view",
    "discrete_partition", "format_partition", "join", "join_all",
    "make_partition", "meet", "parse_partition", "refines",
    "trivial_partition",
    "PerronData", "perron", "spectral_radius", "weight_degree",
    "IntersectionTable", "b_operator", "coarsest_equitable", "is_B_invariant",
    "is_equitable", "is_weight_equitable", "is_weight_equitable_commute",
    "perron_constant_on_cells", "quotient_eigen_check", "scc_partition",
    "weight_intersection_numbers",
    "JointContext", "fractional_isomorphism_witness", "is_balanced",
    "make_joint_context", "ratio_check", "restriction",
    "check_permutation",
    "compose", "format_cycles", "identity", "inverse", "is_automorphism",
    "is_fixed_point_free", "is_involution", "order", "power",
    "Cotree", "CotreeNode", "aut_generators", "build_cotree",
    "c_homogeneous_search", "enumerate_connected_cographs",
    "enumerate_connected_cotrees", "has_nice_automorphism",
    "nice_automorphism", "pairs_partition", "random_cotree", "reconstruct",
    "two_homogeneous_partition",
    "EnumerationBudget", "all_automorphisms", "all_partitions", "bell_number",
    "enumerate_weight_equitable", "find_fixed_point_free_involution",
    "involution_to_partition", "max_we_refinement", "partition_to_involution",
    "EnumeratedSource", "ExperimentRecord", "RandomSource", "run_experiment",
    "sample_partitions", "subset_join", "verify_record", "write_histogram",
    "write_metadata", "write_records",
]
