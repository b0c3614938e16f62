"""Trigraphs, induced saturation, extremal constructions, exact search,
and the partial-assignment view of saturation for DNF formulas."""

from .errors import ResourceLimitError
from .trigraph import (
    BLACK,
    GRAY,
    WHITE,
    EdgeColor,
    Trigraph,
    all_pairs,
    complete_gray,
    from_pairs,
    index_pair,
    pair_count,
    pair_index,
)
from .patterns import (
    C4,
    K3,
    P3,
    P4,
    PatternGraph,
    complete_graph,
    complete_minus_edge,
    cycle_graph,
    from_edges,
    parse_pattern_id,
    path_graph,
)
from .detect import (
    Embedding,
    Realization,
    contains_induced,
    find_embedding,
    has_realization_brute,
    has_realization_of,
    realizations,
    realize,
)
from .saturation import (
    GrayComponent,
    GrayShape,
    PartitionOutcome,
    SaturationReport,
    classify_gray_components,
    is_indsat,
    partition_star,
    partition_triangle,
)
from .constructions import (
    ConstructionSpec,
    Family,
    construct_alternative,
    construct_tn,
    isat_formula,
    parse_family,
    sat_formula,
)
from .search import (
    CanonicalForm,
    SearchResult,
    all_indsat_witnesses,
    canonical_form,
    canonical_key,
    enumerate_indsat,
    isat_min,
    isat_min_naive,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
