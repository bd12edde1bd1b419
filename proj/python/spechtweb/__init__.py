"""Exact engine for the Specht module S^(n,n,n) in its three diagram bases.

The heavy lifting lives in the C++ extension; this package re-exports the
main operations.
"""

from spechtweb._core import (
    ForkDiagram,
    Tableau,
    act_module,
    boundary_word,
    check_representation,
    crossing_count,
    enumerate_syt,
    expand_in_m,
    expand_via_webs,
    inversions,
    is_m_diagram,
    is_polytabloid,
    m_diagram,
    polytabloid_diagram,
    precedes,
    render_svg,
    run_checks,
    syt_count,
    transition_matrix,
    weak_leq,
    web_json_of_fork,
    word_of,
)

__all__ = [
    "ForkDiagram",
    "Tableau",
    "act_module",
    "boundary_word",
    "check_representation",
    "crossing_count",
    "enumerate_syt",
    "expand_in_m",
    "expand_via_webs",
    "inversions",
    "is_m_diagram",
    "is_polytabloid",
    "m_diagram",
    "polytabloid_diagram",
    "precedes",
    "render_svg",
    "run_checks",
    "syt_count",
    "transition_matrix",
    "weak_leq",
    "web_json_of_fork",
    "word_of",
]

__version__ = "0.1.0"
