"""Wireless mesh channel-assignment analysis toolkit."""

from wmnca._core import (
    ChannelAssignment,
    ChannelSet,
    IncompleteAssignmentError,
    InputMismatchError,
    ParseError,
    RoutingError,
    WmnGraph,
    assign,
    ca_from_json,
    ca_to_json,
    cdal_estimate,
    doc,
    eis_from_orders,
    find_link_set,
    generate_grid,
    rank_labels,
    run_all,
    scheme_label,
    simulate_grid,
    tid,
    topology_from_json,
    topology_to_json,
    validate,
)

__all__ = [
    "ChannelAssignment",
    "ChannelSet",
    "IncompleteAssignmentError",
    "InputMismatchError",
    "ParseError",
    "RoutingError",
    "WmnGraph",
    "assign",
    "ca_from_json",
    "ca_to_json",
    "cdal_estimate",
    "doc",
    "eis_from_orders",
    "find_link_set",
    "generate_grid",
    "rank_labels",
    "run_all",
    "scheme_label",
    "simulate_grid",
    "tid",
    "topology_from_json",
    "topology_to_json",
    "validate",
]

__version__ = "0.1.0"
