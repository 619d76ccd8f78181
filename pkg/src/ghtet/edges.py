"""Edge bookkeeping for a tetrahedron on vertices 0..3.

Edges are kept in the canonical order 12, 13, 14, 23, 24, 34 (1-based labels),
which puts opposite edges at mirrored positions: ``OPPOSITE[e] == 5 - e``.
"""

import itertools

EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_LABELS = ("12", "13", "14", "23", "24", "34")

_INDEX = {frozenset(e): n for n, e in enumerate(EDGES)}


def edge_index(i, j):
    """Position of the edge joining vertices ``i`` and ``j`` (0-based, either order)."""
    if i == j:
        raise ValueError("an edge needs two distinct vertices")
    return _INDEX[frozenset((i, j))]


def opposite(e):
    i, j = EDGES[e]
    k, l = (v for v in range(4) if v not in (i, j))
    return edge_index(k, l)


OPPOSITE = tuple(opposite(e) for e in range(6))


def others(*vertices):
    """Vertices of {0,1,2,3} not listed, in increasing order."""
    return tuple(v for v in range(4) if v not in vertices)


LABEL_INDEX = {label: n for n, label in enumerate(EDGE_LABELS)}


def vertex_permutation_to_edges(perm):
    """Edge permutation induced by a vertex permutation.

    ``perm[v]`` is the new label of vertex ``v``; the result maps old edge
    position ``e`` to new position ``out[e]``.
    """
    return tuple(edge_index(perm[i], perm[j]) for i, j in EDGES)


ALL_PERMUTATIONS = tuple(itertools.permutations(range(4)))
