"""Subsystem entropy rates under random couplings.

For a lazy state the entropy of the distinguished subsystem is stationary
at t = 0 under *every* joint Hamiltonian; conversely a nonzero rate under
some coupling witnesses non-laziness.  Rates are evaluated analytically,

    d(rho_side)/dt = tr_other(-i [H, rho]),
    dS/dt          = -tr( d(rho_side)/dt * log2(rho_side) ),

whenever the reduced spectrum stays clear of zero, and by a central finite
difference of the entropy along the exact unitary evolution otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .bloch import DensityMatrix, Side, _check_side, partial_trace, reduced_state
from .errors import DegenerateSpectrumError, DimensionMismatchError
from .laziness import DEFAULT_TOL, commutator_residual

__all__ = [
    "Coupling",
    "DynamicsAudit",
    "entropy",
    "evolve",
    "reduced_generator",
    "entropy_rate",
    "random_coupling",
    "derive_trial_seed",
    "dynamics_audit",
]

#: reduced eigenvalues below this floor force the finite-difference path
EIG_FLOOR = 1e-12

#: central finite-difference half-step for the fallback rate
FD_STEP = 1e-5

COUPLING_HERMITICITY_TOL = 1e-12

RateMethod = Literal["auto", "analytic", "fd"]


@dataclass(frozen=True)
class Coupling:
    """Hermitian joint Hamiltonian with its generating seed."""

    hamiltonian: np.ndarray
    seed: int

    def __post_init__(self):
        h = np.array(self.hamiltonian, dtype=complex)
        if h.ndim != 2 or h.shape[0] != h.shape[1]:
            raise DimensionMismatchError(f"coupling must be square, got {h.shape}")
        dev = float(np.abs(h - h.conj().T).max())
        if dev > COUPLING_HERMITICITY_TOL:
            raise ValueError(f"coupling is not Hermitian: max asymmetry {dev:.3e}")
        h.setflags(write=False)
        object.__setattr__(self, "hamiltonian", h)


@dataclass(frozen=True)
class DynamicsAudit:
    """Entropy-rate statistics over a battery of random couplings."""

    max_rate: float
    trials: int
    per_trial_rates: tuple[float, ...]
    consistent_with_laziness: bool


def entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy in bits, with 0 log 0 = 0."""
    vals = np.clip(rho.eigenvalues, 0.0, None)
    vals = vals[vals > 0.0]
    return float(-(vals * np.log2(vals)).sum())


def evolve(rho: DensityMatrix, hamiltonian: np.ndarray, t: float) -> DensityMatrix:
    """Exact unitary evolution exp(-iHt) rho exp(iHt) by eigendecomposition."""
    h = np.asarray(hamiltonian, dtype=complex)
    if h.shape != rho.data.shape:
        raise DimensionMismatchError(
            f"hamiltonian shape {h.shape} does not match state shape {rho.data.shape}"
        )
    w, q = np.linalg.eigh(h)
    u = (q * np.exp(-1j * w * t)) @ q.conj().T
    data = u @ rho.data @ u.conj().T
    data = (data + data.conj().T) / 2.0
    return DensityMatrix(rho.dim_a, rho.dim_b, data)


def reduced_generator(rho: DensityMatrix, coupling: Coupling, side: Side) -> np.ndarray:
    """Instantaneous derivative of the reduced state, tr_other(-i [H, rho])."""
    _check_side(side)
    h = coupling.hamiltonian
    if h.shape != rho.data.shape:
        raise DimensionMismatchError(
            f"coupling shape {h.shape} does not match state shape {rho.data.shape}"
        )
    drho = -1j * (h @ rho.data - rho.data @ h)
    return partial_trace(drho, rho.dim_a, rho.dim_b, side)


def entropy_rate(
    rho: DensityMatrix,
    coupling: Coupling,
    side: Side = "A",
    method: RateMethod = "auto",
    step: float = FD_STEP,
) -> float:
    """dS/dt of one subsystem at t = 0 under the given coupling.

    `method="auto"` uses the analytic expression when the reduced spectrum
    is bounded away from zero and falls back to the central finite
    difference otherwise; `"analytic"` raises DegenerateSpectrumError in
    the degenerate case instead of falling back.
    """
    _check_side(side)
    if method not in ("auto", "analytic", "fd"):
        raise ValueError(f"unknown rate method {method!r}")
    red = reduced_state(rho, side)
    if method != "fd":
        min_eig = red.min_eigenvalue
        if min_eig > EIG_FLOOR:
            w, q = np.linalg.eigh(red.data)
            log2_red = (q * np.log2(w)) @ q.conj().T
            dred = reduced_generator(rho, coupling, side)
            return float(-np.trace(dred @ log2_red).real)
        if method == "analytic":
            raise DegenerateSpectrumError(
                f"degenerate spectrum: smallest reduced eigenvalue {min_eig:.3e} "
                f"is at or below the {EIG_FLOOR:g} floor; use the "
                "finite-difference mode"
            )
    h = coupling.hamiltonian
    s_plus = entropy(reduced_state(evolve(rho, h, step), side))
    s_minus = entropy(reduced_state(evolve(rho, h, -step), side))
    return float((s_plus - s_minus) / (2.0 * step))


def random_coupling(dim_a: int, dim_b: int, seed: int) -> Coupling:
    """Hermitian coupling with Gaussian unitary ensemble statistics.

    Entries are independent standard complex normals, Hermitized as
    (G + G^dag)/2, giving unit variance per entry.  Deterministic per seed.
    """
    if dim_a < 2 or dim_b < 2:
        raise DimensionMismatchError(
            f"coupling needs both dimensions >= 2, got ({dim_a}, {dim_b})"
        )
    rng = np.random.default_rng(seed)
    d = dim_a * dim_b
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return Coupling(hamiltonian=(g + g.conj().T) / 2.0, seed=int(seed))


def derive_trial_seed(seed: int, index: int) -> int:
    """Per-trial seed derived from (seed, index); schedule-independent."""
    return int(np.random.SeedSequence((seed, index)).generate_state(1)[0])


def dynamics_audit(
    rho: DensityMatrix,
    side: Side = "A",
    trials: int = 100,
    seed: int = 0,
    *,
    laziness_tol: float = DEFAULT_TOL,
    lazy_rate_tol: float = 1e-8,
    nonlazy_rate_floor: float = 1e-3,
) -> DynamicsAudit:
    """Entropy rates over a battery of seeded random couplings.

    The audit is consistent when a lazy state stays below `lazy_rate_tol`
    on every trial and a non-lazy one exceeds `nonlazy_rate_floor` on at
    least one.  The floor is calibrated per state family, not universal:
    the couplings witness non-laziness with overwhelming probability, but
    the rate magnitude depends on the state.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    lazy = commutator_residual(rho, side) < laziness_tol
    rates = []
    for index in range(trials):
        coupling = random_coupling(rho.dim_a, rho.dim_b, derive_trial_seed(seed, index))
        rates.append(entropy_rate(rho, coupling, side))
    max_rate = max(abs(r) for r in rates)
    consistent = max_rate < lazy_rate_tol if lazy else max_rate > nonlazy_rate_floor
    return DynamicsAudit(
        max_rate=max_rate,
        trials=trials,
        per_trial_rates=tuple(rates),
        consistent_with_laziness=consistent,
    )
