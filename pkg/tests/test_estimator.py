import math

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from ghtet.errors import InadmissibleError
from ghtet.estimator import DihedralAngleMap
from ghtet.validation import check_types

LN2 = math.log(2.0)


def test_check_types():
    assert check_types(["finite", "ideal", "hyperideal", "ideal"]) == (1, 0, -1, 0)
    assert check_types("1,0,-1,1") == (1, 0, -1, 1)
    with pytest.raises(ValueError):
        check_types(["finite"] * 3)
    with pytest.raises(ValueError):
        check_types(["finite", "ideal", "bogus", "ideal"])


def test_params_round_trip():
    est = DihedralAngleMap(types=(0, 0, 0, 0), tol=1e-11)
    assert est.get_params()["tol"] == 1e-11
    assert clone(est).get_params() == est.get_params()


def test_transform_and_inverse(corpus):
    cfgs = [c for c in corpus if c.types == (1, 1, -1, -1)]
    X = np.array([c.lengths for c in cfgs])
    est = DihedralAngleMap(types=(1, 1, -1, -1)).fit(X)
    A = est.transform(X)
    assert A.shape == X.shape
    np.testing.assert_allclose(A, est.fit_transform(X))
    back = DihedralAngleMap(types=(1, 1, -1, -1), initial_lengths=X[0]).fit(X).inverse_transform(A[:1])
    np.testing.assert_allclose(back[0], X[0], atol=1e-7)
    assert list(est.get_feature_names_out()) == ["a12", "a13", "a14", "a23", "a24", "a34"]


def test_jacobian_stack():
    X = np.full((2, 6), LN2)
    est = DihedralAngleMap(types="ideal,ideal,ideal,ideal").fit(X)
    J = est.jacobian(X)
    assert J.shape == (2, 6, 6)
    np.testing.assert_allclose(J, est.jacobian(X, fd=True), atol=1e-8)


def test_validation():
    with pytest.raises(NotFittedError):
        DihedralAngleMap().transform(np.ones((1, 6)))
    with pytest.raises(ValueError):
        DihedralAngleMap().fit(np.ones((2, 5)))
    with pytest.raises(InadmissibleError):
        DihedralAngleMap().fit(np.array([[0.2, 0.2, 0.2, 0.2, 0.2, 3.0]]))


def test_in_pipeline():
    pipe = make_pipeline(FunctionTransformer(np.exp), DihedralAngleMap(types=(0, 0, 0, 0)))
    out = pipe.fit_transform(np.full((3, 6), math.log(LN2)))
    np.testing.assert_allclose(out, math.pi / 3, atol=1e-12)
