"""Distance-window proper-path colorings: graph families, constructions,
verification, and exact search."""

from .graphs import (
    EdgeColoring,
    FamilySpec,
    Graph,
    InvariantViolation,
    Permutation,
    cartesian_product,
    complete_bipartite_graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    double_star_graph,
    generate,
    hypercube_graph,
    join,
    path_graph,
    permutation_graph,
    random_2connected,
    random_tree,
    star_graph,
    wheel_graph,
)
from .io import ParseError, read_coloring, read_graph, write_coloring, write_graph
from .structure import (
    EarDecomposition,
    RootedTree,
    bfs_tree,
    distances,
    ear_decomposition,
    eccentricity,
    hamiltonian_path,
    is_2_connected,
    is_connected,
    is_tree,
    max_subtree_size_with_diameter,
    minimally_2connected_spanning,
    radius,
    sigma2_prime,
)
from .verify import (
    VerificationCertificate,
    VerificationTimeout,
    find_distance_proper_path,
    first_failing_pair,
    is_distance_proper_path,
    verify_coloring,
)
from .exact import (
    ExactResult,
    Inconclusive,
    SearchBudget,
    canonical_colorings,
    min_colors_exact,
    prove_lower_bound,
)
from .construct import (
    AnchorSet,
    ConstructionReport,
    balanced_split,
    color_2connected,
    color_cartesian,
    color_complete_bipartite,
    color_complete_multipartite,
    color_hypercube,
    color_join,
    color_permutation_graph,
    color_traceable,
    color_tree,
    color_wheel,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
