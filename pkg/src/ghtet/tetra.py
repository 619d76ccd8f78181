"""Generalized hyperbolic tetrahedra: Gram matrix, admissibility, dihedral angles.

Dihedral angles are computed two independent ways:

* from cofactors of the 4x4 Gram matrix (``angles_cofactor``), and
* face by face: each face yields the link edge at each of its vertices,
  then each link's cosine law gives the angles at that vertex
  (``angles_link``).

Every dihedral angle appears in two links (one per endpoint), so the link
route carries its own consistency check.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .edges import EDGE_LABELS, EDGES, edge_index, others
from .errors import DegenerateError, DomainError, GeometryError, InadmissibleError
from .link import link_amplitude, link_angle, make_link
from .triangle import DET_FLOOR, TriangleConfig, face_b, ideal_face_b

COS_MARGIN = 1e-12

# Fixed by comparing both angle routes on the regular all-finite tetrahedron.
COFACTOR_SIGN = 1.0


@dataclass(frozen=True, eq=False)
class TetConfig:
    """Four vertex types and six edge lengths in canonical order 12,13,14,23,24,34.

    Lengths are only checked for shape and finiteness here; positivity is
    part of :func:`admissible` so it can be reported alongside other checks.
    """

    types: tuple
    lengths: np.ndarray

    def __post_init__(self):
        types = tuple(kernels.check_vertex_type(e) for e in self.types)
        if len(types) != 4:
            raise DomainError(f"need four vertex types, got {len(types)}")
        lengths = np.array(self.lengths, dtype=float).reshape(-1)
        if lengths.shape != (6,):
            raise DomainError(f"need six edge lengths, got {lengths.size}")
        if not np.all(np.isfinite(lengths)):
            raise DomainError("edge lengths must be finite")
        lengths.flags.writeable = False
        object.__setattr__(self, "types", types)
        object.__setattr__(self, "lengths", lengths)

    def length(self, i, j):
        return float(self.lengths[edge_index(i, j)])

    def tau(self, i, j):
        return kernels.tau(self.length(i, j), self.types[i], self.types[j])

    def with_lengths(self, lengths):
        return TetConfig(self.types, lengths)

    def __repr__(self):
        return f"TetConfig(types={self.types}, lengths={self.lengths.tolist()})"


def face(cfg, opposite_vertex):
    """The face opposite ``opposite_vertex`` and its vertex labels (increasing)."""
    verts = others(opposite_vertex)
    j, k, l = verts
    tri = TriangleConfig(
        tuple(cfg.types[v] for v in verts),
        (cfg.length(k, l), cfg.length(l, j), cfg.length(j, k)),
    )
    return tri, verts


def gram(cfg):
    g = np.empty((4, 4))
    for i in range(4):
        g[i, i] = -cfg.types[i]
    for i, j in EDGES:
        g[i, j] = g[j, i] = -cfg.tau(i, j).tau_prime
    return g


def minor(matrix, row, col):
    return np.delete(np.delete(matrix, row, axis=0), col, axis=1)


def cofactors(matrix):
    n = matrix.shape[0]
    c = np.empty_like(matrix)
    for p in range(n):
        for q in range(n):
            c[p, q] = (-1) ** (p + q) * np.linalg.det(minor(matrix, p, q))
    return c


def principal_minor_dets(g):
    """``det G_ii`` for i = 0..3 (each is the Gram determinant of face i)."""
    return np.array([np.linalg.det(minor(g, i, i)) for i in range(4)])


@dataclass
class AdmissibilityReport:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _angle_cosines(g):
    c = cofactors(g)
    cos = np.empty(6)
    for e, (i, j) in enumerate(EDGES):
        k, l = others(i, j)
        cos[e] = COFACTOR_SIGN * c[k, l] / math.sqrt(c[k, k] * c[l, l])
    return cos


def admissible(cfg):
    """Run every admissibility check and collect all failures."""
    failures = []
    if not np.all(cfg.lengths > 0):
        bad = [EDGE_LABELS[e] for e in range(6) if not cfg.lengths[e] > 0]
        failures.append({"check": "length_positivity", "detail": f"non-positive lengths at edges {bad}"})
        return AdmissibilityReport(False, failures)

    try:
        g = gram(cfg)
    except OverflowError:
        failures.append({"check": "gram_overflow", "detail": "edge lengths too large to evaluate"})
        return AdmissibilityReport(False, failures)
    with np.errstate(over="ignore", invalid="ignore"):
        face_dets = principal_minor_dets(g)
        det = float(np.linalg.det(g))
        if not (np.all(np.isfinite(face_dets)) and math.isfinite(det) and math.isfinite(det ** 3)):
            failures.append({"check": "gram_overflow", "detail": "Gram determinants overflow"})
            return AdmissibilityReport(False, failures)
        for i, d in enumerate(face_dets):
            if not d < -DET_FLOOR:
                failures.append({"check": "face_determinant", "detail": f"face opposite vertex {i + 1}: det = {d:.6e}"})
        if not det < -DET_FLOOR:
            failures.append({"check": "gram_determinant", "detail": f"det G = {det:.6e}"})
        eig = np.linalg.eigvalsh(g)
        n_pos, n_neg = int(np.sum(eig > 0)), int(np.sum(eig < 0))
        if (n_pos, n_neg) != (3, 1):
            failures.append({"check": "gram_signature", "detail": f"signature ({n_pos}, {n_neg}), expected (3, 1)"})
        if np.all(face_dets < -DET_FLOOR):
            cos = _angle_cosines(g)
            for e in range(6):
                if not abs(cos[e]) < 1.0 - COS_MARGIN:
                    failures.append({"check": "angle_cosine", "detail": f"edge {EDGE_LABELS[e]}: cos = {cos[e]:.15g}"})
    return AdmissibilityReport(not failures, failures)


def require_admissible(cfg):
    report = admissible(cfg)
    if not report.ok:
        names = ", ".join(f["check"] for f in report.failures)
        raise InadmissibleError(f"inadmissible configuration ({names})", report)
    return report


def angles_cofactor(cfg, check=True):
    """Dihedral angles from Gram cofactors: ``cos a_ij = c_kl / sqrt(c_kk c_ll)``."""
    if check:
        require_admissible(cfg)
    cos = _angle_cosines(gram(cfg))
    if not np.all(np.abs(cos) < 1.0):
        raise DegenerateError(f"degenerate dihedral angle: cosines {cos.tolist()}")
    return np.arccos(cos)


def link_at(cfg, i, ideal_closed_form=False):
    """Link triangle at vertex ``i`` and the other three vertex labels.

    Link edge ``m`` lies in the face opposite ``verts[m]``, so the angle
    opposite it is the dihedral angle of edge ``(i, verts[m])``.  With
    ``ideal_closed_form`` the link edges of all-ideal faces use the closed
    ideal cosine law instead of the amplitude route.
    """
    verts = others(i)
    edges = []
    for m in verts:
        tri, face_verts = face(cfg, m)
        pos = face_verts.index(i)
        if ideal_closed_form and not any(tri.types):
            edges.append(ideal_face_b(tri, pos))
        else:
            edges.append(face_b(tri, pos))
    return make_link(cfg.types[i], edges), verts


@dataclass
class LinkRouteAngles:
    angles: np.ndarray
    other_end: np.ndarray

    @property
    def discrepancy(self):
        return float(np.max(np.abs(self.angles - self.other_end)))


def angles_link_detail(cfg, check=True):
    """Angles from both endpoint links of every edge."""
    if check:
        require_admissible(cfg)
    seen = {}
    for i in range(4):
        lt, verts = link_at(cfg, i)
        for m, j in enumerate(verts):
            seen.setdefault(edge_index(i, j), []).append(link_angle(lt, m))
    first = np.array([seen[e][0] for e in range(6)])
    second = np.array([seen[e][1] for e in range(6)])
    return LinkRouteAngles(first, second)


def angles_link(cfg, check=True):
    """Angles through the link cosine laws, read from the lower-numbered endpoint."""
    return angles_link_detail(cfg, check).angles


@dataclass
class DetIdentityResiduals:
    face_absolute: np.ndarray
    face_relative: np.ndarray
    link_absolute: np.ndarray
    link_relative: np.ndarray

    @property
    def max_relative(self):
        return float(max(self.face_relative.max(), self.link_relative.max()))


def _face_amplitude_from_lengths(tri):
    """``tau tau rho`` at a vertex chosen so that no determinant is involved."""
    if not any(tri.types):
        b = ideal_face_b(tri, 0)
        return tri.tau(0, 1).tau * tri.tau(0, 2).tau * b
    v = next(u for u in range(3) if tri.types[u] != kernels.IDEAL)
    u, w = (p for p in range(3) if p != v)
    r = kernels.rho(face_b(tri, v), tri.types[v]).rho
    return tri.tau(v, u).tau * tri.tau(v, w).tau * r


def det_identities(cfg):
    """Residuals of the eight determinant identities.

    For each vertex i: ``sqrt(-det G_ii)`` against the face amplitude
    ``tau tau rho`` of the opposite face, and ``sqrt(-det G)`` against
    ``tau_ij tau_ik tau_il`` times the link amplitude at i.  The right-hand
    sides avoid the determinants wherever possible; all-ideal faces go
    through the closed ideal cosine law.
    """
    require_admissible(cfg)
    g = gram(cfg)
    minors = principal_minor_dets(g)
    root_det = math.sqrt(-np.linalg.det(g))
    face_abs, face_rel, link_abs, link_rel = (np.empty(4) for _ in range(4))
    for i in range(4):
        lhs = math.sqrt(-minors[i])
        rhs = _face_amplitude_from_lengths(face(cfg, i)[0])
        face_abs[i] = abs(lhs - rhs)
        face_rel[i] = face_abs[i] / lhs

        lt, verts = link_at(cfg, i, ideal_closed_form=True)
        taus = math.prod(cfg.tau(i, j).tau for j in verts)
        rhs = taus * link_amplitude(lt, 0)
        link_abs[i] = abs(root_det - rhs)
        link_rel[i] = link_abs[i] / root_det
    return DetIdentityResiduals(face_abs, face_rel, link_abs, link_rel)


def is_admissible(cfg):
    try:
        return admissible(cfg).ok
    except (GeometryError, ArithmeticError, np.linalg.LinAlgError):
        return False
