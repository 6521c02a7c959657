"""lcftools: exact list-coloring counts, worst-case assignments, and
threshold certificates for complete bipartite graphs.
"""

from .counting import (
    Budget,
    DEFAULT_BUDGET,
    ListAssignment,
    canonical_assignments,
    count_bipartite_fast,
    count_list_colorings,
    find_bad_assignment,
    is_k_choosable,
    is_list_colorable,
    list_chromatic_number,
    list_color_function_bruteforce,
    minimize_over_assignments,
    plf_equals_chrompoly,
)
from .errors import (
    BudgetExceededError,
    CertificationError,
    ShapeMismatchError,
    StructureError,
    UnsupportedFamilyError,
)
from .graphs import (
    Graph,
    GraphFamily,
    chromatic_polynomial,
    chrompoly_k2l,
    closed_form_chromatic_polynomial,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
)
from .search import (
    SearchConfig,
    SearchRow,
    empirical_threshold_profile,
    exhaustive_min_assignment,
    local_search_bad_assignment,
)
from .thresholds import (
    BalanceProfile,
    BoundReport,
    DEFAULT_EPSILON,
    TransversalParams,
    WitnessRecord,
    assignment_with_profile,
    certify_threshold_above,
    count_for_profile,
    extend_balanced,
    extension_gap_condition,
    min_seed_blocks,
    profile_of,
    seed_gap_condition,
    threshold_bounds,
    threshold_lower_bound,
    thomassen_upper_bound,
    transversal_assignment,
    transversal_count_formula,
    uniform_profile_count,
    verify_witness,
    wqy_upper_bound,
    y_list_types,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceProfile",
    "BoundReport",
    "Budget",
    "BudgetExceededError",
    "CertificationError",
    "DEFAULT_BUDGET",
    "DEFAULT_EPSILON",
    "Graph",
    "GraphFamily",
    "ListAssignment",
    "SearchConfig",
    "SearchRow",
    "ShapeMismatchError",
    "StructureError",
    "TransversalParams",
    "UnsupportedFamilyError",
    "WitnessRecord",
    "assignment_with_profile",
    "canonical_assignments",
    "certify_threshold_above",
    "chromatic_polynomial",
    "chrompoly_k2l",
    "closed_form_chromatic_polynomial",
    "count_bipartite_fast",
    "count_for_profile",
    "count_list_colorings",
    "empirical_threshold_profile",
    "exhaustive_min_assignment",
    "extend_balanced",
    "extension_gap_condition",
    "find_bad_assignment",
    "is_k_choosable",
    "is_list_colorable",
    "list_chromatic_number",
    "list_color_function_bruteforce",
    "local_search_bad_assignment",
    "make_complete",
    "make_complete_bipartite",
    "make_cycle",
    "make_path",
    "min_seed_blocks",
    "minimize_over_assignments",
    "plf_equals_chrompoly",
    "profile_of",
    "seed_gap_condition",
    "threshold_bounds",
    "threshold_lower_bound",
    "thomassen_upper_bound",
    "transversal_assignment",
    "transversal_count_formula",
    "uniform_profile_count",
    "verify_witness",
    "wqy_upper_bound",
    "y_list_types",
]
