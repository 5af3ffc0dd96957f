"""One-round distributed colour reduction on paths and cycles."""

from .compiler import (
    DEFAULT_TABULATION_BOUND,
    AlgorithmCheckError,
    AlgorithmTable,
    CheckResult,
    ImplicitAlgorithm,
    check_properness,
    check_symmetry,
    edge_label_pair,
    example_4to3,
    extract,
    new_colour,
    tabulate,
)
from .core import (
    DEFAULT_MATERIALIZATION_BOUND,
    Collection,
    ColourfulnessReport,
    ComplementPair,
    ConstructCollection,
    ExplicitCollection,
    Family,
    LazyCollection,
    MaterializationLimitError,
    NotColourfulError,
    Subset,
    base_collection_c3,
    collection_sizes,
    complement_pairs,
    construct,
    cross_disjoint,
    first_disjoint_cross,
    is_colourful,
    is_intersecting_family,
    sample_colourful,
)
from .search import (
    DEFAULT_BUDGET,
    ENUMERATION_LIMIT,
    SearchResult,
    construction_lower_bound,
    enumerate_intersecting_families,
    exists_algorithm,
    max_colourful,
)
from .simulator import (
    ChainTrace,
    ColouredGraph,
    ImproperColouringError,
    PaletteMismatchError,
    RoundRecord,
    Violation,
    cole_vishkin_step,
    cole_vishkin_value,
    default_chain,
    naive_step,
    random_proper,
    run_chain,
    step,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MATERIALIZATION_BOUND",
    "DEFAULT_TABULATION_BOUND",
    "AlgorithmCheckError",
    "AlgorithmTable",
    "CheckResult",
    "ImplicitAlgorithm",
    "check_properness",
    "check_symmetry",
    "edge_label_pair",
    "example_4to3",
    "extract",
    "new_colour",
    "tabulate",
    "Collection",
    "ColourfulnessReport",
    "ComplementPair",
    "ConstructCollection",
    "ExplicitCollection",
    "Family",
    "LazyCollection",
    "MaterializationLimitError",
    "NotColourfulError",
    "Subset",
    "base_collection_c3",
    "collection_sizes",
    "complement_pairs",
    "construct",
    "cross_disjoint",
    "first_disjoint_cross",
    "is_colourful",
    "is_intersecting_family",
    "sample_colourful",
    "DEFAULT_BUDGET",
    "ENUMERATION_LIMIT",
    "SearchResult",
    "construction_lower_bound",
    "enumerate_intersecting_families",
    "exists_algorithm",
    "max_colourful",
    "ChainTrace",
    "ColouredGraph",
    "ImproperColouringError",
    "PaletteMismatchError",
    "RoundRecord",
    "Violation",
    "cole_vishkin_step",
    "cole_vishkin_value",
    "default_chain",
    "naive_step",
    "random_proper",
    "run_chain",
    "step",
    "validate",
    "__version__",
]
