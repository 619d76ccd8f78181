"""Input validation helpers shared by the estimator and the CLI."""

import numpy as np
from sklearn.utils.validation import check_array

from .kernels import TYPE_CODES, check_vertex_type


def check_types(types):
    """Accept four vertex types as integers or names ("finite", "ideal", "hyperideal")."""
    if isinstance(types, str):
        types = types.split(",")
    out = []
    for t in types:
        if isinstance(t, str):
            name = t.strip().lower()
            if name in TYPE_CODES:
                out.append(TYPE_CODES[name])
                continue
            t = int(name)
        out.append(check_vertex_type(t))
    if len(out) != 4:
        raise ValueError(f"expected four vertex types, got {len(out)}")
    return tuple(out)


def check_lengths(X):
    X = check_array(X, dtype=np.float64, ensure_2d=True)
    if X.shape[1] != 6:
        raise ValueError(f"expected 6 edge lengths per row, got {X.shape[1]}")
    return X
