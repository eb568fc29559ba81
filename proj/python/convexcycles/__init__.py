"""Convex cycles in graphs: enumeration, the n(m - n + 1)/g bound, Moore
graph tests and girth-cycle counts from the characteristic polynomial."""

from ._core import (
    ConsistencyViolation,
    Disconnected,
    DuplicateEdge,
    Error,
    Graph,
    InconsistentInput,
    InvalidCycle,
    InvalidEdge,
    InvalidParameter,
    NotApplicable,
    OutOfRange,
    ParseError,
    analyze,
    attach_pendant,
    brute_force_convex_cycles,
    char_poly,
    check_extremal,
    convex_cycle_bound,
    convex_cycles,
    delete_vertex,
    diameter,
    expand_factored,
    generate,
    girth,
    girth_cycle_count_spectral,
    is_convex_cycle,
    is_moore,
    parse_graph6,
    read_graphs,
    theorem2_check,
    write_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
