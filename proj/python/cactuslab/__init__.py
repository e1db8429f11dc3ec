"""Spanning cacti, prism Hamilton cycles and certificates.

Graphs are passed as dicts ``{"vertices": [...], "edges": [[a, b], ...]}``,
the same shape the command-line tool reads and writes.
"""

from ._core import (
    CactusError,
    __version__,
    analyze_cactus,
    build_family,
    certify,
    check_lemma,
    hamilton_cycle,
    hamilton_path,
    k_tree,
    k_walk,
    prism_hamilton,
    random_good_cactus,
    spanning_even_cactus,
    verify,
)


def graph(edges, vertices=()):
    """Graph dict from an edge list; isolated vertices may be listed separately."""
    names = list(dict.fromkeys([*vertices, *(v for e in edges for v in e)]))
    return {"vertices": names, "edges": [list(e) for e in edges]}


__all__ = [
    "CactusError",
    "__version__",
    "analyze_cactus",
    "build_family",
    "certify",
    "check_lemma",
    "graph",
    "hamilton_cycle",
    "hamilton_path",
    "k_tree",
    "k_walk",
    "prism_hamilton",
    "random_good_cactus",
    "spanning_even_cactus",
    "verify",
]
