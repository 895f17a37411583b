"""
Text formats for graphs, colorings, labeled graphs and RBDS instances.
"""

from .graph_io import (
    format_coloring,
    format_graph,
    format_labeled_graph,
    format_rbds,
    parse_coloring,
    parse_graph,
    parse_labeled_graph,
    parse_rbds,
    read_graph,
    read_labeled_graph,
    write_graph,
    write_labeled_graph,
)

__all__ = [
    "format_coloring",
    "format_graph",
    "format_labeled_graph",
    "format_rbds",
    "parse_coloring",
    "parse_graph",
    "parse_labeled_graph",
    "parse_rbds",
    "read_graph",
    "read_labeled_graph",
    "write_graph",
    "write_labeled_graph",
]
