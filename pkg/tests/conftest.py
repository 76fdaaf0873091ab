"""Shared fixtures and independent oracle helpers.

The oracle helpers recompute quantities through deliberately naive index
loops so that tests never compare an implementation against itself.
"""

import numpy as np
import pytest

import lazystates as lz


# --------------------------------------------------------------------------
# fixtures
# --------------------------------------------------------------------------

@pytest.fixture(scope="session")
def su2():
    return lz.build_su_basis(2)


@pytest.fixture(scope="session")
def su3():
    return lz.build_su_basis(3)


@pytest.fixture(scope="session")
def bell():
    return lz.maximally_entangled(2)


@pytest.fixture(scope="session")
def witness():
    """Real two-qubit mixture that is not lazy on either side."""
    return make_witness()


def make_witness():
    zero = np.array([1.0, 0.0], dtype=complex)
    plus = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0)
    pz = np.outer(zero, zero.conj())
    pp = np.outer(plus, plus.conj())
    return lz.DensityMatrix(2, 2, 0.5 * np.kron(pz, pp) + 0.5 * np.kron(pp, pz))


# --------------------------------------------------------------------------
# oracles
# --------------------------------------------------------------------------

def naive_partial_trace(matrix, dim_a, dim_b, side):
    """Index-summed partial trace straight from the definition."""
    matrix = np.asarray(matrix)
    if side == "A":
        out = np.zeros((dim_a, dim_a), dtype=complex)
        for a in range(dim_a):
            for c in range(dim_a):
                for b in range(dim_b):
                    out[a, c] += matrix[a * dim_b + b, c * dim_b + b]
    else:
        out = np.zeros((dim_b, dim_b), dtype=complex)
        for b in range(dim_b):
            for d in range(dim_b):
                for a in range(dim_a):
                    out[b, d] += matrix[a * dim_b + b, a * dim_b + d]
    return out


def naive_commutator_residual(rho, side="A"):
    """Dense commutator norm without reusing any library helpers."""
    na, nb = rho.dim_a, rho.dim_b
    red = naive_partial_trace(rho.data, na, nb, side)
    d = na * nb
    big = np.zeros((d, d), dtype=complex)
    for r in range(d):
        for c in range(d):
            if side == "A":
                a, b = divmod(r, nb)
                ap, bp = divmod(c, nb)
                if b == bp:
                    big[r, c] = red[a, ap]
            else:
                a, b = divmod(r, nb)
                ap, bp = divmod(c, nb)
                if a == ap:
                    big[r, c] = red[b, bp]
    comm = rho.data @ big - big @ rho.data
    return float(np.sqrt((np.abs(comm) ** 2).sum()))


def finite_difference_rate(rho, hamiltonian, side, step=1e-5):
    """Central finite difference of the subsystem entropy at t = 0."""
    w, q = np.linalg.eigh(hamiltonian)

    def evolved_entropy(t):
        u = (q * np.exp(-1j * w * t)) @ q.conj().T
        data = u @ rho.data @ u.conj().T
        red = naive_partial_trace(data, rho.dim_a, rho.dim_b, side)
        vals = np.clip(np.linalg.eigvalsh(red), 0.0, None)
        vals = vals[vals > 0.0]
        return float(-(vals * np.log2(vals)).sum())

    return (evolved_entropy(step) - evolved_entropy(-step)) / (2.0 * step)


def golden_su3_contraction(x):
    """Hard-coded transcription of the su(3) contraction matrix F(x)."""
    x1, x2, x3, x4, x5, x6, x7, x8 = x
    s3 = np.sqrt(3.0)
    return np.array(
        [
            [0, x6 / 2, x5 / 2, -x7, -x3 / 2, -x2 / 2, x4, 0],
            [-x6 / 2, 0, x4 / 2, -x3 / 2, -x7 / 2 - s3 * x8 / 2, x1 / 2, x5 / 2, s3 * x5 / 2],
            [-x5 / 2, -x4 / 2, 0, x2 / 2, x1 / 2, x7 / 2 - s3 * x8 / 2, -x6 / 2, s3 * x6 / 2],
            [x7, x3 / 2, -x2 / 2, 0, x6 / 2, -x5 / 2, -x1, 0],
            [x3 / 2, x7 / 2 + s3 * x8 / 2, -x1 / 2, -x6 / 2, 0, x4 / 2, -x2 / 2, -s3 * x2 / 2],
            [x2 / 2, -x1 / 2, -x7 / 2 + s3 * x8 / 2, x5 / 2, -x4 / 2, 0, x3 / 2, -s3 * x3 / 2],
            [-x4, -x5 / 2, x6 / 2, x1, x2 / 2, -x3 / 2, 0, 0],
            [0, -s3 * x5 / 2, -s3 * x6 / 2, 0, s3 * x2 / 2, s3 * x3 / 2, 0, 0],
        ]
    )


def haar_unitary(dim, rng):
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def sample_physical_diagonal_states(count, rng, lazy_fraction=0.5, min_corr=0.01):
    """Physical diagonal-correlation states with |correlation| >= min_corr.

    Roughly `lazy_fraction` of them have x = 0 exactly; the rest carry a
    generic nonzero x.  Rejection-samples against positivity.
    """
    states = []
    while len(states) < count:
        corr = rng.uniform(min_corr, 0.15, size=8) * rng.choice([-1.0, 1.0], size=8)
        make_lazy = rng.random() < lazy_fraction
        x = np.zeros(8) if make_lazy else rng.normal(0.0, 0.05, size=8)
        if not make_lazy and np.abs(x).max() < 1e-3:
            continue
        y = rng.normal(0.0, 0.05, size=8)
        state = lz.diagonal_correlation_state(x, y, corr)
        if state.is_physical:
            states.append((state, x))
    return states
