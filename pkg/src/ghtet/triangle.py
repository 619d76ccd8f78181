"""Generalized hyperbolic triangles (the faces of a generalized tetrahedron).

A face is described by three vertex types and the three edge lengths, with
the length at position ``v`` being the edge *opposite* vertex ``v``.  The
generalized angle ``b`` at a vertex is the length of the link edge cut out
there: a spherical arc at a finite vertex, twice the horocyclic arc at an
ideal vertex, and a geodesic segment of the truncating plane at a
hyperideal vertex.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateError, DomainError, NotRealizableError

#: det of the face Gram matrix must fall below ``-DET_FLOOR``.
DET_FLOOR = 1e-14


@dataclass(frozen=True)
class TriangleConfig:
    types: tuple
    lengths: tuple

    def __post_init__(self):
        types = tuple(kernels.check_vertex_type(e) for e in self.types)
        lengths = tuple(float(x) for x in self.lengths)
        if len(types) != 3 or len(lengths) != 3:
            raise ValueError("a triangle needs three vertex types and three lengths")
        if not all(math.isfinite(x) and x > 0 for x in lengths):
            raise DomainError(f"triangle lengths must be finite and positive, got {lengths}")
        object.__setattr__(self, "types", types)
        object.__setattr__(self, "lengths", lengths)

    def length(self, u, v):
        """Length of the edge joining vertices ``u`` and ``v``."""
        return self.lengths[3 - u - v]

    def tau(self, u, v):
        return kernels.tau(self.length(u, v), self.types[u], self.types[v])


def _others(v):
    return tuple(u for u in range(3) if u != v)


def face_gram(cfg):
    """3x3 Gram matrix: ``-eps`` on the diagonal, ``-tau'`` off it."""
    g = np.empty((3, 3))
    for u in range(3):
        g[u, u] = -cfg.types[u]
        for v in range(u + 1, 3):
            g[u, v] = g[v, u] = -cfg.tau(u, v).tau_prime
    return g


def face_determinant(cfg):
    return float(np.linalg.det(face_gram(cfg)))


def face_amplitude(cfg):
    """``sqrt(-det)`` of the face Gram matrix."""
    det = face_determinant(cfg)
    if not det < -DET_FLOOR:
        raise NotRealizableError(f"face Gram determinant {det:.3e} is not negative")
    return math.sqrt(-det)


def face_rho_prime(cfg, at_vertex):
    """Generalized cosine law at ``at_vertex``: ``(-eps tau'_opp + tau'_a tau'_b)/(tau_a tau_b)``."""
    v = at_vertex
    u, w = _others(v)
    t_vu, t_vw, t_uw = cfg.tau(v, u), cfg.tau(v, w), cfg.tau(u, w)
    num = -cfg.types[v] * t_uw.tau_prime + t_vu.tau_prime * t_vw.tau_prime
    return num / (t_vu.tau * t_vw.tau)


def face_rho(cfg, at_vertex):
    """RhoPair of the generalized angle at ``at_vertex``.

    At an ideal vertex rho' is identically 1, so rho is taken from the
    amplitude: ``rho = sqrt(-det) / (tau_a tau_b)``.
    """
    v = at_vertex
    if cfg.types[v] == kernels.IDEAL:
        u, w = _others(v)
        return kernels.RhoPair(face_amplitude(cfg) / (cfg.tau(v, u).tau * cfg.tau(v, w).tau), 1.0)
    return kernels.rho(face_b(cfg, v), cfg.types[v])


def face_b(cfg, at_vertex):
    """Generalized angle (link edge length) at ``at_vertex``."""
    v = at_vertex
    if cfg.types[v] == kernels.IDEAL:
        return face_rho(cfg, v).rho
    rp = face_rho_prime(cfg, v)
    try:
        return kernels.inverse_rho_prime(rp, cfg.types[v])
    except DomainError as exc:
        raise DegenerateError(f"degenerate triangle at vertex {v}: {exc}") from exc


def ideal_face_b(cfg, at_vertex):
    """Closed form ``2 exp((x_opp - x_a - x_b)/2)`` for an all-ideal face."""
    if any(cfg.types):
        raise DomainError("closed-form ideal angle needs all three vertices ideal")
    u, w = _others(at_vertex)
    return 2.0 * math.exp(0.5 * (cfg.lengths[at_vertex] - cfg.length(at_vertex, u) - cfg.length(at_vertex, w)))


def face_angle_derivatives(cfg, at_vertex):
    """Partial derivatives of the generalized angle at ``at_vertex``.

    Entry ``m`` is the derivative with respect to the edge opposite vertex
    ``m`` (same indexing as ``cfg.lengths``).  The opposite-edge entry is
    ``tau_opp / A``; an adjacent edge gets ``-(tau_opp / A) rho'`` with rho'
    taken at that edge's far endpoint.
    """
    v = at_vertex
    u, w = _others(v)
    base = cfg.tau(u, w).tau / face_amplitude(cfg)
    out = np.empty(3)
    out[v] = base
    for adjacent_opp, third in ((u, w), (w, u)):
        rp = 1.0 if cfg.types[third] == kernels.IDEAL else face_rho_prime(cfg, third)
        out[adjacent_opp] = -base * rp
    return out
