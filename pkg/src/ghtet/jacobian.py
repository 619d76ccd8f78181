"""Jacobian of the dihedral angles with respect to the edge lengths.

The analytic Jacobian is ``s * D @ M @ D`` where ``D = diag(sin a)``,
``M`` depends only on the angles, and the scalar
``s = sqrt(prod_i det G_ii / -(det G)**3)`` carries all dependence on the
vertex types.  ``jacobian_fd`` is a central-difference oracle over the
cofactor angle route, and ``check_symmetries`` measures Luo's five
symmetry families on any candidate matrix.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .edges import EDGES, OPPOSITE, edge_index, others
from .errors import DegenerateError, InadmissibleError, PerturbationError
from .tetra import angles_cofactor, gram, is_admissible, principal_minor_dets, require_admissible

SIN_FLOOR = 1e-12
DEFAULT_STEP = 1e-5


def _cos(angles, i, j):
    return math.cos(angles[edge_index(i, j)])


def w(angles, edge):
    """Diagonal entry of ``M`` for the given edge position."""
    i, j = EDGES[edge]
    k, l = others(i, j)
    s = math.sin(angles[edge])
    if s < SIN_FLOOR:
        raise DegenerateError(f"sin a = {s:.3e} too small at edge position {edge}")
    c = lambda p, q: _cos(angles, p, q)  # noqa: E731
    num = (
        c(i, j) * c(j, k) * c(k, i)
        + c(i, j) * c(j, l) * c(l, i)
        + c(i, k) * c(j, l)
        + c(i, l) * c(j, k)
    )
    return num / (s * s)


def m_matrix(angles):
    """The 6x6 angle matrix ``M``.

    Diagonal: ``w``.  Opposite edges: 1.  Two edges sharing a vertex, say
    ``ij`` and ``ik``: ``-cos a_jk``.
    """
    angles = np.asarray(angles, dtype=float)
    m = np.empty((6, 6))
    for e in range(6):
        m[e, e] = w(angles, e)
        m[e, OPPOSITE[e]] = 1.0
        for f in range(e + 1, 6):
            if f == OPPOSITE[e]:
                continue
            a, b = set(EDGES[e]), set(EDGES[f])
            (j,), (k,) = a - b, b - a
            m[e, f] = m[f, e] = -_cos(angles, j, k)
    return m


def prefactor(cfg):
    g = gram(cfg)
    det = np.linalg.det(g)
    radicand = np.prod(principal_minor_dets(g)) / -(det ** 3)
    if not (radicand > 0 and math.isfinite(radicand)):
        raise InadmissibleError(f"prefactor radicand {radicand:.3e} is not positive")
    return math.sqrt(radicand)


def jacobian_analytic(cfg):
    require_admissible(cfg)
    angles = angles_cofactor(cfg, check=False)
    sines = np.sin(angles)
    # Elementwise D M D keeps the result exactly symmetric.
    return prefactor(cfg) * (np.outer(sines, sines) * m_matrix(angles))


def jacobian_fd(cfg, h=DEFAULT_STEP):
    """Central differences of ``angles_cofactor``; column ``r`` perturbs length ``r``."""
    require_admissible(cfg)
    jac = np.empty((6, 6))
    for r in range(6):
        step = np.zeros(6)
        step[r] = h
        cols = []
        for sign in (1.0, -1.0):
            moved = cfg.with_lengths(cfg.lengths + sign * step)
            if not is_admissible(moved):
                raise PerturbationError(
                    f"perturbation of edge position {r} by {sign * h:g} left the admissible region"
                )
            cols.append(angles_cofactor(moved, check=False))
        jac[:, r] = (cols[0] - cols[1]) / (2.0 * h)
    return jac


FAMILIES = ("schlafli", "wigner", "adjacent", "diagonal", "antidiagonal_reflection")


@dataclass
class SymmetryReport:
    tol: float
    deviations: dict = field(default_factory=dict)

    @property
    def passed(self):
        return {name: dev <= self.tol for name, dev in self.deviations.items()}

    @property
    def ok(self):
        return all(self.passed.values())


def normalized(jac, angles):
    """``P[e, f] = J[e, f] / (sin a_e sin a_f)``."""
    s = np.sin(np.asarray(angles, dtype=float))
    if np.any(s < SIN_FLOOR):
        raise DegenerateError("cannot normalize by a vanishing sine")
    return np.asarray(jac, dtype=float) / np.outer(s, s)


def check_symmetries(jac, angles, tol=1e-9):
    """Largest absolute deviation in each symmetry family of ``P``."""
    p = normalized(jac, angles)
    angles = np.asarray(angles, dtype=float)
    dev = dict.fromkeys(FAMILIES, 0.0)

    dev["schlafli"] = float(np.max(np.abs(p - p.T)))

    anti = np.array([p[e, OPPOSITE[e]] for e in range(6)])
    dev["wigner"] = float(np.max(anti) - np.min(anti))

    for e, (a, b) in enumerate(EDGES):
        for i, j in ((a, b), (b, a)):
            for k in others(i, j):
                (l,) = others(i, j, k)
                ij, ik, kl, jk = edge_index(i, j), edge_index(i, k), edge_index(k, l), edge_index(j, k)
                d = abs(p[ij, ik] + p[ij, kl] * math.cos(angles[jk]))
                dev["adjacent"] = max(dev["adjacent"], float(d))
        d = abs(p[e, e] - p[e, OPPOSITE[e]] * w(angles, e))
        dev["diagonal"] = max(dev["diagonal"], float(d))

    for e in range(6):
        for f in range(6):
            if f != e:
                d = abs(p[e, f] - p[OPPOSITE[e], OPPOSITE[f]])
                dev["antidiagonal_reflection"] = max(dev["antidiagonal_reflection"], float(d))
    return SymmetryReport(tol, dev)


def ideal_kernel_vectors(types):
    """One vector per ideal vertex: the indicator of its three incident edges."""
    out = []
    for i, eps in enumerate(types):
        if eps == 0:
            v = np.zeros(6)
            for j in others(i):
                v[edge_index(i, j)] = 1.0
            out.append(v)
    return out

