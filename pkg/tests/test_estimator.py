import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import FeatureUnion, Pipeline

from tetraspeed.estimator import (
    CongruenceSpeedTransformer,
    SpeedProfileTransformer,
    TowerResidueTransformer,
    check_bases,
)
from tetraspeed.exceptions import InvalidBaseError


def test_check_bases_shapes():
    assert check_bases([2, 3]) == [2, 3]
    assert check_bases(np.array([[7], [807]])) == [7, 807]
    assert check_bases(["12345678901234567890123"]) == [12345678901234567890123]
    assert check_bases(np.array([5], dtype=np.int64)) == [5]


@pytest.mark.parametrize(
    "X, exc",
    [
        ([], ValueError),
        ([[1, 2]], ValueError),
        (np.zeros((1, 1, 1), dtype=int), ValueError),
        ([2.0], TypeError),
        ([True], TypeError),
        (["12a"], TypeError),
        ([-3], ValueError),
        ([10], InvalidBaseError),
        ([1], InvalidBaseError),
    ],
)
def test_check_bases_rejects(X, exc):
    with pytest.raises(exc):
        check_bases(X)


def test_check_bases_allow_excluded():
    assert check_bases([0, 1, 10], allow_excluded=True) == [0, 1, 10]


def test_params_and_clone():
    est = CongruenceSpeedTransformer(window=12, use_shortcut=True)
    params = est.get_params()
    assert params["window"] == 12 and params["use_shortcut"] is True
    twin = clone(est)
    assert twin.get_params() == params and twin is not est
    est.set_params(window=20)
    assert est.window == 20


def test_speed_transform():
    out = CongruenceSpeedTransformer().fit_transform([807, 5, 99])
    assert out.dtype == np.int64 and out.shape == (3, 1)
    assert out[:, 0].tolist() == [3, 2, 2]


def test_shortcut_matches_oracle():
    bases = [101, 201, 999, 7]
    plain = CongruenceSpeedTransformer().fit_transform(bases)
    fast = CongruenceSpeedTransformer(use_shortcut=True).fit_transform(bases)
    assert plain.tolist() == fast.tolist()


def test_shortcut_handles_big_bases():
    out = CongruenceSpeedTransformer(use_shortcut=True).fit_transform([10**50 - 1])
    assert out[0, 0] == 50


def test_profile_transform():
    est = SpeedProfileTransformer(max_height=8)
    out = est.fit_transform([[807]])
    assert out.tolist() == [[0, 4, 4, 4, 4, 3, 3, 3]]
    assert est.get_feature_names_out()[-1] == "speed_b8"


def test_tower_transform():
    out = TowerResidueTransformer(height=2, digits=30).fit_transform([807, 10])
    assert out.shape == (2, 1) and out.dtype == object
    assert out[0, 0] == 549620396283318273888501737943
    assert out[1, 0] == 10**10


def test_pipeline_and_union():
    union = FeatureUnion([("v", CongruenceSpeedTransformer()), ("p", SpeedProfileTransformer(max_height=3))])
    out = Pipeline([("feat", union)]).fit_transform([807, 3])
    assert out.shape == (2, 4)
    assert out[0].tolist() == [3, 0, 4, 4]
