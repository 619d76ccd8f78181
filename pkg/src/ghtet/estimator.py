"""scikit-learn style wrapper around the forward and inverse angle maps.

Rows of ``X`` are edge-length vectors in canonical order; rows of the
transformed output are the six dihedral angles in the same order.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .edges import EDGE_LABELS
from .errors import InadmissibleError
from .jacobian import DEFAULT_STEP, jacobian_analytic, jacobian_fd
from .solver import solve
from .tetra import TetConfig, admissible, angles_cofactor
from .validation import check_lengths, check_types


class DihedralAngleMap(TransformerMixin, BaseEstimator):
    """Edge lengths -> dihedral angles for a fixed type signature.

    ``transform`` applies the forward map row by row, ``inverse_transform``
    runs the Newton solver from ``initial_lengths`` (all 1.0 by default).
    Set ``validate=False`` to skip the per-row admissibility check in
    ``fit``.

    Parameters
    ----------
    types : sequence of 4 ints or names
    tol : float
        Angle tolerance for ``inverse_transform``.
    max_iter : int
    initial_lengths : array-like of shape (6,), optional
    validate : bool
    """

    def __init__(self, types=(1, 1, 1, 1), tol=1e-10, max_iter=100, initial_lengths=None, validate=True):
        self.types = types
        self.tol = tol
        self.max_iter = max_iter
        self.initial_lengths = initial_lengths
        self.validate = validate

    def fit(self, X, y=None):
        X = check_lengths(X)
        self.types_ = check_types(self.types)
        if self.validate:
            for n, row in enumerate(X):
                report = admissible(TetConfig(self.types_, row))
                if not report.ok:
                    raise InadmissibleError(f"row {n} is inadmissible", report)
        self.n_features_in_ = 6
        return self

    def _configs(self, X):
        check_is_fitted(self, "types_")
        return [TetConfig(self.types_, row) for row in check_lengths(X)]

    def transform(self, X):
        return np.array([angles_cofactor(cfg) for cfg in self._configs(X)])

    def inverse_transform(self, A):
        check_is_fitted(self, "types_")
        A = check_lengths(A)
        return np.array([
            solve(self.types_, row, self.initial_lengths, self.tol, self.max_iter).lengths for row in A
        ])

    def jacobian(self, X, fd=False, h=DEFAULT_STEP):
        """Stack of 6x6 Jacobians, one per row of ``X``."""
        if fd:
            return np.array([jacobian_fd(cfg, h) for cfg in self._configs(X)])
        return np.array([jacobian_analytic(cfg) for cfg in self._configs(X)])

    def get_feature_names_out(self, input_features=None):
        return np.array([f"a{label}" for label in EDGE_LABELS], dtype=object)
