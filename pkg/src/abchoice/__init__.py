"""List multicoloring: constructive choice procedures, exhaustive
choosability oracles, strong-coloring tools, and the graph machinery
underneath them."""

from .choices import Choice, ListAssignment, check_choice, is_valid_choice
from .coloring import chromatic_number, k_coloring
from .density import DensityReport, max_density, orient_max_outdegree
from .gadgets import (
    GadgetOutput,
    amplifier,
    amplifier_hard_lists,
    bg23_hard_lists,
    bg23_to_bg3,
    cone,
    lift_hard_lists,
    lift_k,
)
from .graphs import (
    Digraph,
    FamilySpec,
    Graph,
    complete,
    complete_multipartite,
    cycle,
    generate,
    line_graph,
    path_graph,
    theta,
)
from .kernels import (
    OddDirectedCycleError,
    choice_via_orientation,
    degree_choice,
    find_kernel,
    kernel_list_choice,
)
from .oracle import (
    ChoosabilityVerdict,
    SearchBudgetExceeded,
    count_canonical_assignments,
    find_list_coloring,
    halve_choice,
    is_ab_choosable,
    is_f_choosable,
    iter_canonical_assignments,
)
from .randomized import (
    BoundsReport,
    MultipartiteSpec,
    TrialReport,
    chernoff_bound,
    graph_bounds,
    multipartite_bounds,
    multipartite_random_choice,
    random_partition_choice,
)
from .setfamily import SplitResult, partition_family, split_family
from .strong import (
    StrongColorVerdict,
    StrongLBInstance,
    append_cliques,
    is_strongly_k_colorable,
    schi_lower_bound_graph,
    strong_choosable_block_choice,
    strong_color_lift,
)
from .structure import (
    DegeneracyResult,
    SccReport,
    StructureReport,
    TwoChoosableVerdict,
    classify_two_choosable,
    core_of,
    degeneracy,
    scc_and_directed_bipartition,
    structure_queries,
)

__version__ = "0.1.0"
