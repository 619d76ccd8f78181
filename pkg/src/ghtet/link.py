"""Link triangles.

The link at a vertex is spherical, Euclidean or hyperbolic according to the
vertex type, and its inner angles are the dihedral angles of the edges
through that vertex.  Angle ``m`` is opposite link edge ``m``.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateError, DomainError


@dataclass(frozen=True)
class LinkTriangle:
    geometry: int
    edges: tuple

    def __post_init__(self):
        eps = kernels.check_vertex_type(self.geometry)
        edges = tuple(float(b) for b in self.edges)
        if len(edges) != 3:
            raise ValueError("a link triangle has three edges")
        for b in edges:
            kernels.rho(b, eps)  # domain check
        object.__setattr__(self, "geometry", eps)
        object.__setattr__(self, "edges", edges)

    @property
    def rhos(self):
        return tuple(kernels.rho(b, self.geometry) for b in self.edges)


def _others(m):
    return tuple(p for p in range(3) if p != m)


def link_cos(lt, opposite_edge):
    m = opposite_edge
    p, q = _others(m)
    if lt.geometry == kernels.IDEAL:
        bm, bp, bq = lt.edges[m], lt.edges[p], lt.edges[q]
        return (bp * bp + bq * bq - bm * bm) / (2.0 * bp * bq)
    r = lt.rhos
    num = r[m].rho_prime - r[p].rho_prime * r[q].rho_prime
    if lt.geometry == kernels.HYPERIDEAL:
        num = -num
    return num / (r[p].rho * r[q].rho)


def link_angle(lt, opposite_edge):
    """Inner angle opposite the given edge, in (0, pi)."""
    c = link_cos(lt, opposite_edge)
    if not abs(c) < 1.0:
        raise DegenerateError(f"degenerate link: cos = {c!r}")
    return math.acos(c)


def link_angles(lt):
    return np.array([link_angle(lt, m) for m in range(3)])


def link_amplitude(lt, angle_index=0):
    """``rho_p * rho_q * sin(a_m)`` for the two edges adjacent to angle ``m``."""
    m = angle_index
    p, q = _others(m)
    c = link_cos(lt, m)
    if not abs(c) < 1.0:
        raise DegenerateError(f"degenerate link: cos = {c!r}")
    r = lt.rhos
    return r[p].rho * r[q].rho * math.sqrt(1.0 - c * c)


def link_angle_derivatives(lt, angle_index):
    """Gradient of angle ``m`` with respect to the three link edges."""
    m = angle_index
    p, q = _others(m)
    base = lt.rhos[m].rho / link_amplitude(lt, m)
    out = np.empty(3)
    out[m] = base
    out[p] = -base * link_cos(lt, q)
    out[q] = -base * link_cos(lt, p)
    return out


def make_link(geometry, edges):
    try:
        return LinkTriangle(geometry, edges)
    except DomainError as exc:
        raise DegenerateError(f"invalid link edges {tuple(edges)}: {exc}") from exc
