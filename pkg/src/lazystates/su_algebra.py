"""Generator bases of su(n) and their structure constants.

The basis for dimension n contains, in order, the n(n-1)/2 symmetric
off-diagonal generators, the n(n-1)/2 antisymmetric ones (both blocks in
lexicographic (j, k) order), and the n-1 diagonal generators.  With
P[j,k] = |j><k| (1-based) they read

    u[j,k] = P[j,k] + P[k,j]                          1 <= j < k <= n
    v[j,k] = i (P[j,k] - P[k,j])                      1 <= j < k <= n
    w[l]   = -sqrt(2/(l(l+1))) (P[1,1] + ... + P[l,l] - l P[l+1,l+1])

Note the overall minus sign on the diagonal family and the orientation of
the antisymmetric one: for n = 2 this yields (X, -Y, -Z) rather than the
textbook Pauli triple.  The two sign flips cancel inside every commutator,
so the n = 2 structure constants are still the Levi-Civita symbol.

All generators g_i are Hermitian, traceless, and normalized to
tr(g_i g_j) = 2 delta_ij.  The structure constants are the real, totally
antisymmetric coefficients in [g_i, g_j] = 2i sum_k f_ijk g_k, recovered
from the traces f_ijk = tr([g_i, g_j] g_k) / (4i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

__all__ = [
    "SuBasis",
    "StructureConstants",
    "BasisVerification",
    "build_su_basis",
    "structure_constants",
    "verify_basis",
]

#: entries of f with absolute value at or below this are treated as zero
ZERO_CUTOFF = 1e-12

#: acceptance threshold for the defining basis relations in verify_basis
IDENTITY_TOL = 1e-10

#: maximum allowed deviation of the Gram matrix tr(g_i g_j) from 2*I
GRAM_TOL = 1e-10


def _permutation_sign(triple: tuple[int, int, int]) -> int:
    inversions = sum(
        1 for a in range(3) for b in range(a + 1, 3) if triple[a] > triple[b]
    )
    return -1 if inversions % 2 else 1


class StructureConstants:
    """Sparse, totally antisymmetric rank-3 tensor over 1-based indices.

    Only triples with i < j < k are stored; every other index order is
    recovered from the permutation sign, and repeated indices give zero.
    """

    def __init__(self, size: int, entries: dict[tuple[int, int, int], float]):
        self.size = int(size)
        cleaned = {}
        for (i, j, k), v in entries.items():
            if not (1 <= i < j < k <= self.size):
                raise ValueError(f"non-canonical index triple {(i, j, k)}")
            if abs(v) > ZERO_CUTOFF:
                cleaned[(i, j, k)] = float(v)
        self._entries = cleaned
        self._dense: np.ndarray | None = None

    def value(self, i: int, j: int, k: int) -> float:
        """f_ijk for any 1-based index order."""
        if len({i, j, k}) < 3:
            return 0.0
        canonical = tuple(sorted((i, j, k)))
        return _permutation_sign((i, j, k)) * self._entries.get(canonical, 0.0)

    def triples(self) -> Iterator[tuple[int, int, int, float]]:
        """Nonzero canonical entries as sorted (i, j, k, value) tuples."""
        return iter(sorted((i, j, k, v) for (i, j, k), v in self._entries.items()))

    def dense(self) -> np.ndarray:
        """Full (N, N, N) tensor with 0-based indices; cached, read-only."""
        if self._dense is None:
            f = np.zeros((self.size,) * 3)
            for (i, j, k), v in self._entries.items():
                a, b, c = i - 1, j - 1, k - 1
                f[a, b, c] = f[b, c, a] = f[c, a, b] = v
                f[a, c, b] = f[b, a, c] = f[c, b, a] = -v
            f.setflags(write=False)
            self._dense = f
        return self._dense

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.size == other.size and self._entries == other._entries


@dataclass(frozen=True)
class SuBasis:
    """Ordered su(n) generator basis together with its structure constants."""

    dim: int
    generators: np.ndarray  # (n**2 - 1, n, n) complex, read-only
    f: StructureConstants


@dataclass(frozen=True)
class BasisVerification:
    """Worst-case deviations from the defining relations of an SuBasis."""

    max_trace: float
    max_hermiticity: float
    max_orthogonality: float
    max_commutator: float

    @property
    def passed(self) -> bool:
        return (
            max(
                self.max_trace,
                self.max_hermiticity,
                self.max_orthogonality,
                self.max_commutator,
            )
            < IDENTITY_TOL
        )


@lru_cache(maxsize=None)
def build_su_basis(n: int) -> SuBasis:
    """Construct the su(n) generator basis in canonical order.

    The order is: symmetric block, antisymmetric block (each lexicographic
    in (j, k)), then the diagonal generators.  Results are cached; the
    returned arrays are read-only and safe to share.
    """
    if n < 2:
        raise ValueError(f"su(n) basis requires n >= 2, got {n}")
    gens = []
    for j in range(n):
        for k in range(j + 1, n):
            g = np.zeros((n, n), dtype=complex)
            g[j, k] = 1.0
            g[k, j] = 1.0
            gens.append(g)
    for j in range(n):
        for k in range(j + 1, n):
            g = np.zeros((n, n), dtype=complex)
            g[j, k] = 1.0j
            g[k, j] = -1.0j
            gens.append(g)
    for l in range(1, n):
        g = np.zeros((n, n), dtype=complex)
        g[np.arange(l), np.arange(l)] = 1.0
        g[l, l] = -float(l)
        g *= -np.sqrt(2.0 / (l * (l + 1)))
        gens.append(g)
    generators = np.array(gens)
    f = structure_constants(generators)
    generators.setflags(write=False)
    return SuBasis(dim=n, generators=generators, f=f)


def structure_constants(generators) -> StructureConstants:
    """Structure constants f_ijk = tr([g_i, g_j] g_k) / (4i) of a basis.

    The generators must satisfy tr(g_i g_j) = 2 delta_ij; anything with a
    larger Gram deviation than 1e-10 is rejected.  The analytically
    vanishing imaginary parts of the traces are discarded.
    """
    gens = np.asarray(generators, dtype=complex)
    if gens.ndim != 3 or gens.shape[1] != gens.shape[2]:
        raise ValueError(f"expected a stack of square matrices, got shape {gens.shape}")
    count = gens.shape[0]
    gram = np.einsum("aij,bji->ab", gens, gens)
    gram_dev = np.abs(gram - 2.0 * np.eye(count)).max()
    if gram_dev > GRAM_TOL:
        raise ValueError(
            f"generators are not orthonormal: max Gram deviation {gram_dev:.3e}"
        )
    # tr(g_a g_b g_c) for all triples; antisymmetrize the first pair.
    triple = np.einsum("aij,bjk,cki->abc", gens, gens, gens)
    f = ((triple - np.transpose(triple, (1, 0, 2))) / 4j).real
    entries = {}
    for a in range(count):
        for b in range(a + 1, count):
            for c in range(b + 1, count):
                if abs(f[a, b, c]) > ZERO_CUTOFF:
                    entries[(a + 1, b + 1, c + 1)] = f[a, b, c]
    return StructureConstants(count, entries)


def verify_basis(basis: SuBasis) -> BasisVerification:
    """Report worst-case deviations from the defining algebra relations.

    Checks tracelessness, Hermiticity, the orthogonality normalization,
    and the reconstruction of every commutator from the stored structure
    constants.  Report-only: nothing is raised.
    """
    g = basis.generators
    count = g.shape[0]
    max_trace = float(np.abs(np.trace(g, axis1=1, axis2=2)).max())
    max_herm = float(np.abs(g - np.conj(np.transpose(g, (0, 2, 1)))).max())
    gram = np.einsum("aij,bji->ab", g, g)
    max_orth = float(np.abs(gram - 2.0 * np.eye(count)).max())
    prod = np.einsum("aij,bjk->abik", g, g)
    comm = prod - np.transpose(prod, (1, 0, 2, 3))
    recon = 2j * np.einsum("abk,kij->abij", basis.f.dense(), g)
    max_comm = float(np.abs(comm - recon).max())
    return BasisVerification(
        max_trace=max_trace,
        max_hermiticity=max_herm,
        max_orthogonality=max_orth,
        max_commutator=max_comm,
    )
