"""scikit-learn adapters: signature-derived feature vectors for collections of knots.

The transformer is stateless; ``fit`` only validates.  Each input item is a
Seifert matrix (nested lists, :class:`SeifertMatrix`, or a 2-D integer array)
or a :class:`~knotsig.table.KnotRecord`.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .bounds import report_from_function
from .seifert import SeifertMatrixError, validate
from .signature import signature_function
from .table import KnotRecord

FEATURES = ("gds_lower", "g4_lower", "n_jumps", "max_abs_arc", "max_abs_root", "max_root_nullity")


def check_seifert_matrix(V):
    """Validated :class:`SeifertMatrix` from any matrix-like input."""
    if isinstance(V, KnotRecord):
        return V.seifert
    if isinstance(V, np.ndarray):
        if V.ndim != 2:
            raise SeifertMatrixError(f"expected a 2-D array, got shape {V.shape}")
        if V.size and not np.issubdtype(V.dtype, np.integer):
            if not np.all(np.mod(V, 1) == 0):
                raise SeifertMatrixError("array has non-integer entries")
        V = V.astype(np.int64).tolist()
    return validate(V)


def check_seifert_collection(X):
    if isinstance(X, (str, bytes)):
        raise TypeError("expected a sequence of Seifert matrices, got a string")
    out = [check_seifert_matrix(V) for V in X]
    if not out:
        raise ValueError("empty collection")
    return out


def _features(V):
    f = signature_function(V)
    rep = report_from_function(f)
    roots = [abs(p.sigma) for p in f.point_values]
    nulls = [p.nullity for p in f.point_values]
    return [rep.gds_lower, rep.g4_lower, len(f.jumps),
            max(abs(a) for a in f.arc_values), max(roots, default=0), max(nulls, default=0)]


class SignatureTransformer(TransformerMixin, BaseEstimator):
    """Map knots to integer features: both genus bounds and signature extremes.

    Parameters
    ----------
    features : sequence of str or None
        Subset of ``FEATURES`` to emit, in the given order; ``None`` keeps all.
    """

    def __init__(self, features=None):
        self.features = features

    def _columns(self):
        cols = FEATURES if self.features is None else tuple(self.features)
        bad = [c for c in cols if c not in FEATURES]
        if bad or not cols:
            raise ValueError(f"unknown features {bad}; choose from {FEATURES}")
        return cols

    def fit(self, X, y=None):
        check_seifert_collection(X)
        self.n_features_out_ = len(self._columns())
        return self

    def transform(self, X):
        cols = self._columns()
        idx = [FEATURES.index(c) for c in cols]
        rows = [_features(V) for V in check_seifert_collection(X)]
        return np.asarray([[r[i] for i in idx] for r in rows], dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(self._columns(), dtype=object)
