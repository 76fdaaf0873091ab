"""Built-in example-state generators.

Everything returned here has passed the full DensityMatrix validation
including positivity; parameter combinations that would produce an
unphysical matrix are rejected.
"""

from __future__ import annotations

import numpy as np

from .bloch import DensityMatrix, random_density_matrix
from .laziness import diagonal_correlation_state

__all__ = [
    "maximally_entangled",
    "product_state",
    "werner",
    "generate_example",
    "EXAMPLE_NAMES",
]


def maximally_entangled(dim: int) -> DensityMatrix:
    """Projector onto sum_i |ii> / sqrt(dim) on a dim x dim split."""
    dim = int(dim)
    if dim < 2:
        raise ValueError(f"maximally entangled state needs dim >= 2, got {dim}")
    vec = np.zeros(dim * dim, dtype=complex)
    vec[:: dim + 1] = 1.0 / np.sqrt(dim)
    return DensityMatrix(dim, dim, np.outer(vec, vec.conj()))


def product_state(marginal_a, marginal_b) -> DensityMatrix:
    """Kronecker product of two single-system density matrices."""
    a = np.asarray(marginal_a, dtype=complex)
    b = np.asarray(marginal_b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(
            f"marginals must be square matrices, got shapes {a.shape} and {b.shape}"
        )
    return DensityMatrix(a.shape[0], b.shape[0], np.kron(a, b))


def werner(p: float) -> DensityMatrix:
    """Two-qubit mixture p |singlet><singlet| + (1 - p) I/4."""
    p = float(p)
    singlet = np.zeros(4, dtype=complex)
    singlet[1] = 1.0 / np.sqrt(2.0)
    singlet[2] = -1.0 / np.sqrt(2.0)
    data = p * np.outer(singlet, singlet.conj()) + (1.0 - p) * np.eye(4) / 4.0
    return DensityMatrix(2, 2, data)


def _diag_marginal(probs) -> np.ndarray:
    probs = np.asarray(probs, dtype=float)
    if probs.ndim != 1 or probs.size < 2:
        raise ValueError(f"marginal spec must list at least two weights, got {probs!r}")
    return np.diag(probs).astype(complex)


def _vector8(value, default=0.0) -> np.ndarray:
    if value is None:
        return np.full(8, float(default))
    arr = np.atleast_1d(np.asarray(value, dtype=float))
    if arr.size == 1:
        return np.full(8, float(arr[0]))
    return arr


EXAMPLE_NAMES = (
    "maximally_entangled",
    "product",
    "diagonal_correlation",
    "werner",
    "random",
)


def generate_example(name: str, params: dict | None = None) -> DensityMatrix:
    """Build a named example state from a parameter mapping.

    Known names and their parameters:

    * maximally_entangled: d (local dimension, default 2)
    * product: a, b (diagonal marginal weights, default [0.7, 0.3] each)
    * diagonal_correlation: x, y, correlations (length-8 vectors or scalars)
    * werner: p (singlet weight, default 0.5)
    * random: dimA, dimB, seed
    """
    params = dict(params or {})
    if name == "maximally_entangled":
        state = maximally_entangled(params.pop("d", 2))
    elif name == "product":
        state = product_state(
            _diag_marginal(params.pop("a", [0.7, 0.3])),
            _diag_marginal(params.pop("b", [0.7, 0.3])),
        )
    elif name == "diagonal_correlation":
        state = diagonal_correlation_state(
            _vector8(params.pop("x", None)),
            _vector8(params.pop("y", None)),
            _vector8(params.pop("correlations", None), default=0.1),
        )
    elif name == "werner":
        state = werner(params.pop("p", 0.5))
    elif name == "random":
        state = random_density_matrix(
            int(params.pop("dimA", 2)),
            int(params.pop("dimB", 2)),
            int(params.pop("seed", 0)),
        )
    else:
        raise ValueError(f"unknown example {name!r}; known: {', '.join(EXAMPLE_NAMES)}")
    if params:
        raise ValueError(f"unknown parameters for {name!r}: {sorted(params)}")
    return state.require_physical()
