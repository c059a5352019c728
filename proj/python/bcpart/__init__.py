"""Balanced connected graph partition algorithms.

Thin wrapper around the C++ core: approximate balanced connected partitions
of claw-free graphs, connected edge partitions via line graphs, and
approximate Gyori-Lovasz partitions of k-connected graphs.
"""

from ._core import (
    Graph,
    PartitionError,
    bcep,
    divide_or_separator,
    gen_clawfree,
    gen_k_connected,
    gl_balanced,
    gl_both,
    gl_lower,
    gl_upper,
    is_claw_free,
    max_min_bcp,
    min_max_bcp,
    oracle_opt_bcp,
    vertex_connectivity_at_least,
)

__all__ = [
    "Graph",
    "PartitionError",
    "bcep",
    "divide_or_separator",
    "gen_clawfree",
    "gen_k_connected",
    "gl_balanced",
    "gl_both",
    "gl_lower",
    "gl_upper",
    "is_claw_free",
    "max_min_bcp",
    "min_max_bcp",
    "oracle_opt_bcp",
    "vertex_connectivity_at_least",
]

__version__ = "0.1.0"
