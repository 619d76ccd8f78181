"""Angles, Gram data, Jacobians and an inverse solver for generalized hyperbolic tetrahedra."""

from .errors import GeometryError, InadmissibleError, SolverError
from .estimator import DihedralAngleMap
from .jacobian import check_symmetries, jacobian_analytic, jacobian_fd
from .sampling import SIGNATURES, sample
from .solver import solve
from .tetra import TetConfig, admissible, angles_cofactor, angles_link, gram

__all__ = [
    "DihedralAngleMap",
    "GeometryError",
    "InadmissibleError",
    "SIGNATURES",
    "SolverError",
    "TetConfig",
    "admissible",
    "angles_cofactor",
    "angles_link",
    "check_symmetries",
    "gram",
    "jacobian_analytic",
    "jacobian_fd",
    "sample",
    "solve",
]
