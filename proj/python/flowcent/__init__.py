"""Flow-based group centrality: vitality drop, forced passage and forced throughput."""

from ._core import (
    BudgetExceeded,
    FlowcentError,
    Network,
    betweenness,
    build_network,
    decompose_max_flow,
    delta,
    embedded_fixtures,
    lambda_,
    load_network,
    max_flow,
    max_sequences,
    pair_report,
    parse_network,
    phi,
    run_examples,
    selftest,
    vitality,
)

__all__ = [
    "BudgetExceeded",
    "FlowcentError",
    "Network",
    "betweenness",
    "build_network",
    "decompose_max_flow",
    "delta",
    "embedded_fixtures",
    "lambda_",
    "load_network",
    "max_flow",
    "max_sequences",
    "pair_report",
    "parse_network",
    "phi",
    "run_examples",
    "selftest",
    "vitality",
]
