import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from conftest import TREFOIL
from knotsig.estimators import (FEATURES, SignatureTransformer, check_seifert_collection,
                                check_seifert_matrix)
from knotsig.seifert import NotUnimodularError, SeifertMatrixError


def test_check_helpers():
    assert check_seifert_matrix(np.array(TREFOIL)).n == 2
    assert check_seifert_matrix(np.array([[-1.0, 1.0], [0.0, -1.0]])).n == 2
    with pytest.raises(SeifertMatrixError):
        check_seifert_matrix(np.array([[0.5, 1], [0, 0]]))
    with pytest.raises(SeifertMatrixError):
        check_seifert_matrix(np.zeros(4))
    with pytest.raises(NotUnimodularError):
        check_seifert_matrix([[1, 2], [0, 1]])
    with pytest.raises(ValueError):
        check_seifert_collection([])
    with pytest.raises(TypeError):
        check_seifert_collection("[[1]]")


def test_transform_features(fixtures):
    records, _ = fixtures
    t = SignatureTransformer().fit([TREFOIL])
    X = t.transform([TREFOIL, []] + records[:1])
    assert X.dtype == np.int64 and X.shape == (3, len(FEATURES))
    assert X[0].tolist() == [2, 1, 1, 2, 1, 1]
    assert X[1].tolist() == [0, 0, 0, 0, 0, 0]
    assert X[2, :2].tolist() == [1, 0]
    assert list(t.get_feature_names_out()) == list(FEATURES)


def test_params_and_subset():
    t = SignatureTransformer(features=["gds_lower"])
    assert t.get_params() == {"features": ["gds_lower"]}
    assert clone(t).get_params() == t.get_params()
    assert t.fit_transform([TREFOIL]).tolist() == [[2]]
    with pytest.raises(ValueError):
        SignatureTransformer(features=["nope"]).fit([TREFOIL])


def test_in_pipeline():
    pipe = make_pipeline(SignatureTransformer(), StandardScaler())
    out = pipe.fit_transform([TREFOIL, [[1, 0], [-1, 1]], []])
    assert out.shape == (3, len(FEATURES))
