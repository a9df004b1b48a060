"""Sliding dominoes on triangular grid graphs.

Vertex ids and piece labels are 0-based here; the text formats use 1-based ids.
"""

from ._trigrid import (
    BudgetExceeded,
    Graph,
    InvariantError,
    ParseError,
    Placement,
    PlanReport,
    PreconditionError,
    SlideMove,
    component_count,
    degree6_vertices,
    distance,
    find_hamilton,
    generate,
    is_connected,
    is_factor_critical,
    is_locally_connected,
    is_reconfigurable,
    is_star_of_david,
    is_two_connected,
    legal_moves,
    parse_graph,
    parse_placement,
    plan,
    slide,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
