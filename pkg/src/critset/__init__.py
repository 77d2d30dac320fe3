"""Critical node-subset detection on directed weighted graphs.

Seed a subset of nodes, let taint spread along directed edges, and
measure how much of the graph the subset soils. Cost functions balance
that coverage against subset size (optionally with penalty terms and
fuzzy gate constraints), and three search strategies maximize the cost
over all nonempty subsets: exhaustive enumeration, simulated annealing,
and a genetic algorithm.
"""
from .constraints import (
    ConstraintError,
    ConstraintEvaluator,
    UnknownConstraintError,
    cardinality_between,
    forbid_nodes,
    fuzzy_small_subset,
    require_nodes,
    same_component,
)
from .cost import (
    CoefficientFn,
    CostConfigError,
    CostSpec,
    Score,
    SubsetEvaluator,
    basic_cost,
    constant,
    gated_cost,
    generalized_cost,
    over_n,
    parse_cost_config,
)
from .graphs import (
    Graph,
    GraphError,
    GraphParseError,
    parse_graph,
    serialize_graph,
    total_weight,
    weak_components,
)
from .ingest import (
    LogFormatError,
    TransactionRecord,
    build_from_log,
    generate_log,
    read_log_csv,
    write_log_csv,
)
from .optimize import (
    AnnealingSchedule,
    Candidate,
    GaParams,
    InfeasibleSearchError,
    SearchResult,
    anneal,
    evolve,
    exhaustive_search,
)
from .taint import SoiledReport, propagate, seed_set, soil, soiled_measure

__version__ = "0.1.0"

__all__ = [
    "AnnealingSchedule",
    "Candidate",
    "CoefficientFn",
    "ConstraintError",
    "ConstraintEvaluator",
    "CostConfigError",
    "CostSpec",
    "GaParams",
    "Graph",
    "GraphError",
    "GraphParseError",
    "InfeasibleSearchError",
    "LogFormatError",
    "Score",
    "SearchResult",
    "SoiledReport",
    "SubsetEvaluator",
    "TransactionRecord",
    "UnknownConstraintError",
    "anneal",
    "basic_cost",
    "build_from_log",
    "cardinality_between",
    "constant",
    "evolve",
    "exhaustive_search",
    "forbid_nodes",
    "fuzzy_small_subset",
    "gated_cost",
    "generate_log",
    "generalized_cost",
    "over_n",
    "parse_cost_config",
    "parse_graph",
    "propagate",
    "read_log_csv",
    "require_nodes",
    "same_component",
    "seed_set",
    "serialize_graph",
    "soil",
    "soiled_measure",
    "total_weight",
    "weak_components",
    "write_log_csv",
]
