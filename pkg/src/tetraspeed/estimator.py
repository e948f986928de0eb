"""scikit-learn style transformers over columns of tetration bases.

Bases are arbitrary-precision integers, so inputs are plain sequences or
object arrays of Python ints; numpy integer arrays work too while the
values fit.
"""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .speed import DEFAULT_MAX_DIGITS, DEFAULT_MAX_HEIGHT, DEFAULT_WINDOW, WINDOWED, check_base
from .speed import constant_speed_profile, constant_speed_shortcut, speed_profile
from .tower import tower_mod


def check_bases(X, *, allow_excluded: bool = False) -> list[int]:
    """Flatten ``X`` (1-D, or 2-D with one column) into a list of Python ints.

    Digit strings are accepted. Floats are rejected even when integral,
    because large bases cannot round-trip through them. Unless
    ``allow_excluded`` is set, 0, 1 and multiples of 10 raise
    :class:`~tetraspeed.exceptions.InvalidBaseError`.
    """
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single column of bases, got shape {arr.shape}")
        arr = arr[:, 0]
    elif arr.ndim != 1:
        raise ValueError(f"expected a 1-D or single-column 2-D input, got {arr.ndim}-D")
    if arr.size == 0:
        raise ValueError("no bases given")
    bases = []
    for v in arr:
        if isinstance(v, str) and v.strip().isdigit():
            v = int(v)
        elif isinstance(v, numbers.Integral) and not isinstance(v, bool):
            v = int(v)
        else:
            raise TypeError(f"bases must be integers or digit strings, got {v!r}")
        if v < 0:
            raise ValueError(f"bases must be nonnegative, got {v}")
        if not allow_excluded:
            check_base(v)
        bases.append(v)
    return bases


class CongruenceSpeedTransformer(TransformerMixin, BaseEstimator):
    """Map each base to its constant congruence speed.

    Stateless: ``fit`` only validates its input. With ``use_shortcut`` the
    closed forms for bases ``= 1 (mod 100)`` and ``10**t - 1`` replace the
    tower oracle where they apply.
    """

    def __init__(
        self,
        policy=WINDOWED,
        window=DEFAULT_WINDOW,
        min_height=None,
        max_height=DEFAULT_MAX_HEIGHT,
        max_digits=DEFAULT_MAX_DIGITS,
        use_shortcut=False,
    ):
        self.policy = policy
        self.window = window
        self.min_height = min_height
        self.max_height = max_height
        self.max_digits = max_digits
        self.use_shortcut = use_shortcut

    def fit(self, X, y=None):
        check_bases(X)
        self.n_features_in_ = 1
        return self

    def _speed(self, a):
        if self.use_shortcut:
            v = constant_speed_shortcut(a)
            if v is not None:
                return v
        return constant_speed_profile(
            a,
            self.policy,
            window=self.window,
            min_height=self.min_height,
            max_height=self.max_height,
            max_digits=self.max_digits,
        ).constant_speed

    def transform(self, X):
        return np.array([[self._speed(a)] for a in check_bases(X)], dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.array(["constant_speed"], dtype=object)

    def __sklearn_is_fitted__(self):
        return True


class SpeedProfileTransformer(TransformerMixin, BaseEstimator):
    """Map each base to its speeds at heights ``1..max_height``, one column per height."""

    def __init__(self, max_height=8, max_digits=DEFAULT_MAX_DIGITS):
        self.max_height = max_height
        self.max_digits = max_digits

    def fit(self, X, y=None):
        check_bases(X)
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        rows = [speed_profile(a, self.max_height, max_digits=self.max_digits).speeds for a in check_bases(X)]
        return np.array(rows, dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.array([f"speed_b{b}" for b in range(1, self.max_height + 1)], dtype=object)

    def __sklearn_is_fitted__(self):
        return True


class TowerResidueTransformer(TransformerMixin, BaseEstimator):
    """Map each base to its height-``height`` tower modulo ``10**digits`` (object column of ints)."""

    def __init__(self, height=2, digits=30):
        self.height = height
        self.digits = digits

    def fit(self, X, y=None):
        check_bases(X, allow_excluded=True)
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        bases = check_bases(X, allow_excluded=True)
        out = np.empty((len(bases), 1), dtype=object)
        for i, a in enumerate(bases):
            out[i, 0] = tower_mod(a, self.height, self.digits).residue
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array([f"tower_h{self.height}_mod_1e{self.digits}"], dtype=object)

    def __sklearn_is_fitted__(self):
        return True
