"""scikit-learn style front end.

The estimators are stateless decision procedures: ``fit`` records the
decomposition of the operators it is given, ``predict``/``transform`` recompute
on new operators.  Hyper-parameters go through ``get_params``/``set_params``
so the objects clone and grid-search like any other estimator.
"""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from .characterize import DEFAULT_TOL, DecompositionResult, Variant, membership, recover_symbol
from .exceptions import SpaceMismatch
from .model_space import CoeffVector
from .operators import OperatorMatrix, SymbolPair, atto_from_pair


def check_operator(A) -> OperatorMatrix:
    """Validate a single operator (finite entries, shape matching its spaces)."""
    if not isinstance(A, OperatorMatrix):
        raise TypeError(f"expected OperatorMatrix, got {type(A).__name__}")
    if A.domain.node_count != A.codomain.node_count:
        raise SpaceMismatch("domain and codomain bases use different grids")
    return A


def check_operators(X) -> list[OperatorMatrix]:
    """Accept one operator or an iterable of them; always return a list."""
    if isinstance(X, OperatorMatrix):
        return [X]
    if not isinstance(X, Iterable):
        raise TypeError("X must be an OperatorMatrix or an iterable of them")
    ops = [check_operator(A) for A in X]
    if not ops:
        raise ValueError("X is empty")
    return ops


def check_tolerance(tol) -> float:
    tol = float(tol)
    if not tol > 0 or not np.isfinite(tol):
        raise ValueError(f"tol must be a positive finite number, got {tol!r}")
    return tol


class ATTOClassifier(ClassifierMixin, BaseEstimator):
    """Labels operators as members (True) or non-members (False).

    Parameters
    ----------
    variant : {"T1", "C2", "C3a", "C3b", "SI"}
        Which characterization to test.
    tol : float
        Relative residual threshold.
    a, b : complex
        Modified-shift parameters, used by C3a/C3b only.
    """

    def __init__(self, variant="T1", tol=DEFAULT_TOL, a=0j, b=0j):
        self.variant = variant
        self.tol = tol
        self.a = a
        self.b = b

    def _decide(self, A: OperatorMatrix) -> DecompositionResult:
        return membership(A, Variant.parse(self.variant), check_tolerance(self.tol), self.a, self.b)

    def fit(self, X, y=None):
        ops = check_operators(X)
        self.results_ = [self._decide(A) for A in ops]
        self.residuals_ = np.array([r.residual for r in self.results_])
        self.verdicts_ = np.array([r.verdict for r in self.results_])
        self.classes_ = np.array([False, True])
        first = self.results_[0]
        self.psi_, self.chi_ = first.psi, first.chi
        return self

    def decision_function(self, X) -> np.ndarray:
        """``tol - residual``: positive for members."""
        return check_tolerance(self.tol) - self.residuals(X)

    def residuals(self, X) -> np.ndarray:
        return np.array([self._decide(A).residual for A in check_operators(X)])

    def predict(self, X) -> np.ndarray:
        return np.array([self._decide(A).verdict for A in check_operators(X)])


class SymbolRecovery(TransformerMixin, BaseEstimator):
    """Maps member operators to their normalized symbol pair ``(chi, psi)``."""

    def __init__(self, tol=DEFAULT_TOL):
        self.tol = tol

    def fit(self, X, y=None):
        self.pairs_ = self.transform(X)
        return self

    def transform(self, X) -> list[SymbolPair]:
        tol = check_tolerance(self.tol)
        return [recover_symbol(A, tol) for A in check_operators(X)]

    def inverse_transform(self, pairs) -> list[OperatorMatrix]:
        if isinstance(pairs, SymbolPair):
            pairs = [pairs]
        out = []
        for p in pairs:
            if not isinstance(p.chi, CoeffVector) or not isinstance(p.psi, CoeffVector):
                raise TypeError("expected SymbolPair of CoeffVectors")
            out.append(atto_from_pair(p.chi.space, p.psi.space, p))
        return out
