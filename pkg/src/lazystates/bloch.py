"""Bipartite density matrices and their generator-basis expansion.

A state on an (n_A * n_B)-dimensional product space expands as

    rho = (1/(n_A n_B)) (I + sum_i x_i s_i (x) I + sum_j y_j I (x) t_j
                           + sum_ij T_ij s_i (x) t_j)

over su(n_A) generators s_i and su(n_B) generators t_j.  The real vectors
x and y are the local coherence vectors and the real matrix T is the
correlation matrix; with the tr(s_i s_j) = 2 delta_ij normalization the
coefficients are recovered as

    x_i  = (n_A / 2)       tr(rho (s_i (x) I))
    y_j  = (n_B / 2)       tr(rho (I (x) t_j))
    T_ij = (n_A n_B / 4)   tr(rho (s_i (x) t_j))

Subsystem A indexes the outer (slow) Kronecker factor throughout the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import numpy as np

from .errors import DimensionMismatchError, InvalidStateError
from .su_algebra import SuBasis, build_su_basis

__all__ = [
    "Side",
    "DensityMatrix",
    "BlochForm",
    "decompose",
    "reconstruct",
    "reduced_state",
    "partial_trace",
    "random_density_matrix",
]

Side = Literal["A", "B"]

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
#: eigenvalues above this (slightly negative) floor count as nonnegative
POSITIVITY_TOL = -1e-10


def _check_side(side: str) -> str:
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return side


class DensityMatrix:
    """Complex Hermitian unit-trace matrix with a bipartite dimension split.

    Hermiticity and unit trace are enforced at construction.  Positivity is
    *not*: generator expansions with out-of-range coefficients legitimately
    produce indefinite matrices, so it is exposed as the lazy `is_physical`
    flag instead and enforced only where callers demand it via
    `require_physical`.
    """

    def __init__(self, dim_a: int, dim_b: int, data):
        dim_a, dim_b = int(dim_a), int(dim_b)
        if dim_a < 1 or dim_b < 1:
            raise DimensionMismatchError(
                f"subsystem dimensions must be >= 1, got ({dim_a}, {dim_b})"
            )
        data = np.array(data, dtype=complex)
        d = dim_a * dim_b
        if data.shape != (d, d):
            raise DimensionMismatchError(
                f"matrix shape {data.shape} does not match dimensions "
                f"({dim_a}, {dim_b}) -> ({d}, {d})"
            )
        asym = np.abs(data - data.conj().T)
        max_asym = float(asym.max())
        if max_asym > HERMITICITY_TOL:
            i, j = np.unravel_index(int(asym.argmax()), asym.shape)
            raise InvalidStateError(
                f"hermiticity violation: max asymmetry {max_asym:.3e} "
                f"at entry ({i}, {j})"
            )
        trace_dev = abs(complex(np.trace(data)) - 1.0)
        if trace_dev > TRACE_TOL:
            raise InvalidStateError(f"trace deviation {trace_dev:.3e}")
        data.setflags(write=False)
        self.dim_a = dim_a
        self.dim_b = dim_b
        self.data = data

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        """Real spectrum in ascending order; cached."""
        vals = np.linalg.eigvalsh(self.data)
        vals.setflags(write=False)
        return vals

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def is_physical(self) -> bool:
        return self.min_eigenvalue >= POSITIVITY_TOL

    def require_physical(self) -> "DensityMatrix":
        if not self.is_physical:
            raise InvalidStateError(
                f"positivity violation: smallest eigenvalue {self.min_eigenvalue:.3e}"
            )
        return self

    def __repr__(self) -> str:
        return f"DensityMatrix(dim_a={self.dim_a}, dim_b={self.dim_b})"


@dataclass(frozen=True)
class BlochForm:
    """Coherence vectors x, y and correlation matrix T of a bipartite state."""

    x: np.ndarray
    y: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        for name in ("x", "y", "T"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.x.ndim != 1 or self.y.ndim != 1 or self.T.shape != (
            self.x.size,
            self.y.size,
        ):
            raise DimensionMismatchError(
                f"inconsistent Bloch shapes x{self.x.shape}, y{self.y.shape}, "
                f"T{self.T.shape}"
            )


def _generators_for(dim: int, basis: SuBasis | None) -> np.ndarray:
    """Generator stack for one side; empty stack for a trivial dimension."""
    if dim == 1:
        return np.zeros((0, 1, 1), dtype=complex)
    if basis is None:
        basis = build_su_basis(dim)
    if basis.dim != dim:
        raise DimensionMismatchError(
            f"basis dimension {basis.dim} does not match subsystem dimension {dim}"
        )
    return basis.generators


def decompose(
    rho: DensityMatrix,
    basis_a: SuBasis | None = None,
    basis_b: SuBasis | None = None,
) -> BlochForm:
    """Expand a state over the generator basis.

    Bases are built on demand when omitted.  A trivial (dimension-1) side
    contributes empty coherence/correlation blocks, so reduced states pass
    through unchanged.
    """
    na, nb = rho.dim_a, rho.dim_b
    ga = _generators_for(na, basis_a)
    gb = _generators_for(nb, basis_b)
    r = rho.data.reshape(na, nb, na, nb)
    x = (na / 2.0) * np.einsum("abcb,kca->k", r, ga).real
    y = (nb / 2.0) * np.einsum("abad,kdb->k", r, gb).real
    t = (na * nb / 4.0) * np.einsum("abcd,ica,jdb->ij", r, ga, gb).real
    return BlochForm(x=x, y=y, T=t)


def reconstruct(form: BlochForm, basis_a: SuBasis, basis_b: SuBasis) -> DensityMatrix:
    """Assemble the density matrix of a Bloch form.

    The result is Hermitian with unit trace by construction.  Positivity is
    not guaranteed; inspect `is_physical` on the returned state.
    """
    na, nb = basis_a.dim, basis_b.dim
    if form.x.size != na * na - 1 or form.y.size != nb * nb - 1:
        raise DimensionMismatchError(
            f"Bloch form sized ({form.x.size}, {form.y.size}) does not match "
            f"bases of dimension ({na}, {nb})"
        )
    ga, gb = basis_a.generators, basis_b.generators
    d = na * nb
    local_a = np.einsum("i,iab->ab", form.x, ga)
    local_b = np.einsum("j,jab->ab", form.y, gb)
    cross = np.einsum("ij,iac,jbd->abcd", form.T, ga, gb).reshape(d, d)
    data = (
        np.eye(d, dtype=complex)
        + np.kron(local_a, np.eye(nb))
        + np.kron(np.eye(na), local_b)
        + cross
    ) / (na * nb)
    return DensityMatrix(na, nb, data)


def partial_trace(matrix: np.ndarray, dim_a: int, dim_b: int, side: Side) -> np.ndarray:
    """Partial trace of an arbitrary (dim_a*dim_b)-square matrix.

    `side` names the subsystem that is *kept*.
    """
    _check_side(side)
    r = np.asarray(matrix).reshape(dim_a, dim_b, dim_a, dim_b)
    if side == "A":
        return np.einsum("abcb->ac", r)
    return np.einsum("abad->bd", r)


def reduced_state(rho: DensityMatrix, side: Side) -> DensityMatrix:
    """Reduced state of one subsystem (the other one is traced out)."""
    red = partial_trace(rho.data, rho.dim_a, rho.dim_b, side)
    if side == "A":
        return DensityMatrix(rho.dim_a, 1, red)
    return DensityMatrix(1, rho.dim_b, red)


def random_density_matrix(dim_a: int, dim_b: int, seed) -> DensityMatrix:
    """Full-rank random state rho = G G^dag / tr(G G^dag), G complex Gaussian."""
    rng = np.random.default_rng(seed)
    d = dim_a * dim_b
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    w = g @ g.conj().T
    w = (w + w.conj().T) / 2.0
    return DensityMatrix(dim_a, dim_b, w / np.trace(w).real)
