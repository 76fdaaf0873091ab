"""Acceptance battery.

Each test pins one release criterion at its stated tolerance and prints a
single pass/fail line (visible with `pytest tests/test_acceptance.py -s`).
"""

import numpy as np
import pytest

import lazystates as lz
from conftest import (
    golden_su3_contraction,
    haar_unitary,
    make_witness,
    sample_physical_diagonal_states,
)

SQ3 = np.sqrt(3.0)

#: canonical su(3) structure constants implied by the nine listed
#: orientations (values 1, 1/2, sqrt(3)/2), reduced to i < j < k
SU3_EXPECTED = {
    (1, 4, 7): 1.0,
    (1, 2, 6): -0.5,
    (1, 3, 5): -0.5,
    (2, 3, 4): -0.5,
    (2, 5, 7): 0.5,
    (3, 6, 7): -0.5,
    (4, 5, 6): -0.5,
    (2, 5, 8): SQ3 / 2.0,
    (3, 6, 8): SQ3 / 2.0,
}


def report(name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def lazy_battery():
    return {
        "bell": lz.maximally_entangled(2),
        "product": lz.product_state(np.diag([0.7, 0.3]), np.diag([0.6, 0.4])),
        "werner": lz.werner(0.5),
        "diagonal": lz.diagonal_correlation_state(
            np.zeros(8), np.zeros(8), np.full(8, 0.1)
        ),
    }


def test_criterion_01_su3_structure_constants(su3):
    stored = {(i, j, k): v for i, j, k, v in su3.f.triples()}
    extra = set(stored) - set(SU3_EXPECTED)
    missing = set(SU3_EXPECTED) - set(stored)
    worst = max(
        abs(stored[key] - SU3_EXPECTED[key]) for key in SU3_EXPECTED if key in stored
    )
    listed = (
        su3.f.value(1, 4, 7) == pytest.approx(1.0, abs=1e-12)
        and all(
            su3.f.value(*ijk) == pytest.approx(0.5, abs=1e-12)
            for ijk in [(2, 1, 6), (3, 1, 5), (3, 2, 4), (2, 5, 7), (3, 7, 6), (5, 4, 6)]
        )
        and su3.f.value(3, 6, 8) == pytest.approx(SQ3 / 2.0, abs=1e-12)
        and su3.f.value(2, 5, 8) == pytest.approx(SQ3 / 2.0, abs=1e-12)
    )
    ok = not extra and not missing and worst <= 1e-12 and listed
    report(
        "criterion 01: su(3) structure constants",
        ok,
        f"max dev {worst:.2e}, extras {sorted(extra)}, missing {sorted(missing)}",
    )


def test_criterion_02_contraction_matrix_golden(su3):
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(20):
        x = rng.standard_normal(8)
        dev = np.abs(lz.contraction_matrix(x, su3) - golden_su3_contraction(x)).max()
        worst = max(worst, dev)
    report(
        "criterion 02: golden 8x8 contraction transcription",
        worst <= 1e-14,
        f"max entrywise dev {worst:.2e} over 20 draws",
    )


def test_criterion_03_exact_norm_identity():
    worst = 0.0
    for na, nb in [(2, 2), (2, 3), (3, 3)]:
        ba, bb = lz.build_su_basis(na), lz.build_su_basis(nb)
        prefactor = lz.criterion_prefactor(na, nb, "A")
        for trial in range(200):
            rho = lz.random_density_matrix(na, nb, trial)
            direct = lz.commutator_residual(rho, "A")
            g = lz.criterion_matrix(lz.decompose(rho, ba, bb), ba, "A")
            rel = abs(direct - prefactor * np.linalg.norm(g)) / direct
            worst = max(worst, rel)
    report(
        "criterion 03: commutator/criterion norm identity",
        worst <= 1e-11,
        f"worst relative deviation {worst:.2e} over 600 states",
    )


def test_criterion_04_diagonal_family_equivalence():
    rng = np.random.default_rng(404)
    disagreements = 0
    lazy_seen = nonlazy_seen = 0
    for state, x in sample_physical_diagonal_states(50, rng, min_corr=0.01):
        verdict = lz.is_lazy(state, "A", tol=1e-10).is_lazy
        expected = np.abs(x).max() < 1e-12
        lazy_seen += expected
        nonlazy_seen += not expected
        disagreements += verdict != expected
    ok = disagreements == 0 and lazy_seen > 0 and nonlazy_seen > 0
    report(
        "criterion 04: diagonal family lazy iff x = 0",
        ok,
        f"{disagreements} disagreements ({lazy_seen} lazy / {nonlazy_seen} non-lazy)",
    )


def test_criterion_05_entropy_rate_forward_direction():
    worst_lazy = 0.0
    for name, state in lazy_battery().items():
        for index in range(100):
            coupling = lz.random_coupling(
                state.dim_a, state.dim_b, lz.derive_trial_seed(505, index)
            )
            worst_lazy = max(worst_lazy, abs(lz.entropy_rate(state, coupling, "A")))
    witness = make_witness()
    best_witness = 0.0
    for index in range(100):
        coupling = lz.random_coupling(2, 2, lz.derive_trial_seed(505, index))
        best_witness = max(best_witness, abs(lz.entropy_rate(witness, coupling, "A")))
    ok = worst_lazy < 1e-8 and best_witness > 1e-3
    report(
        "criterion 05: zero entropy rate for lazy battery",
        ok,
        f"lazy max {worst_lazy:.2e}, witness max {best_witness:.2e}",
    )


def test_criterion_06_analytic_vs_finite_difference():
    rng = np.random.default_rng(606)
    worst_ratio = 0.0
    for _ in range(50):
        na, nb = int(rng.choice([2, 3])), int(rng.choice([2, 3]))
        rho = lz.random_density_matrix(na, nb, int(rng.integers(2**32)))
        coupling = lz.random_coupling(na, nb, int(rng.integers(2**32)))
        analytic = lz.entropy_rate(rho, coupling, "A", method="analytic")
        fd = lz.entropy_rate(rho, coupling, "A", method="fd")
        allowed = max(1e-6, 1e-4 * abs(analytic))
        worst_ratio = max(worst_ratio, abs(analytic - fd) / allowed)
    report(
        "criterion 06: analytic vs finite-difference entropy rate",
        worst_ratio <= 1.0,
        f"worst |difference|/allowed {worst_ratio:.2e} over 50 pairs",
    )


def test_criterion_07_kernel_determinant_identity():
    spot = lz.kernel_determinant(lz.GaussianStandardForm(2.0, 3.0, 1.0, 0.0))
    rng = np.random.default_rng(707)
    worst = 0.0
    for _ in range(100):
        form = lz.random_standard_form(rng)
        closed = lz.kernel_determinant(form)
        pair = lz.commutator_kernels(form)
        for kernel in (pair.plus, pair.minus):
            worst = max(worst, abs(np.linalg.det(kernel) - closed) / abs(closed))
    ok = spot == pytest.approx(992.0, abs=0) and worst < 1e-9
    report(
        "criterion 07: kernel determinant closed form",
        ok,
        f"spot value {spot:g}, worst relative dev {worst:.2e} over 100 forms",
    )


def test_criterion_08_kernel_quadratic_identity():
    rng = np.random.default_rng(808)
    worst = 0.0
    for _ in range(100):
        form = lz.random_standard_form(rng)
        u = complex(rng.standard_normal(), rng.standard_normal())
        v = complex(rng.standard_normal(), rng.standard_normal())
        numeric = lz.kernel_quadratic_difference(form, u, v)
        worst = max(worst, abs(numeric - lz.kernel_quadratic_closed_form(form, u, v)))
    uncoupled = lz.GaussianStandardForm(2.0, 3.0, 0.0, 0.0)
    zero_dev = max(
        abs(lz.kernel_quadratic_difference(uncoupled, 1 + 1j, -0.5 + 2j)),
        abs(lz.kernel_quadratic_closed_form(uncoupled, 1 + 1j, -0.5 + 2j)),
    )
    ok = worst < 1e-9 and zero_dev < 1e-12
    report(
        "criterion 08: kernel quadratic-form closed form",
        ok,
        f"worst abs dev {worst:.2e} over 100 tuples, uncoupled {zero_dev:.2e}",
    )


def test_criterion_09_fock_cross_check():
    residuals = {}
    for r in (0.0, 0.1, 0.2, 0.3, 0.4, 0.5):
        rho = lz.fock_truncate(lz.squeezed_thermal_form(1.0, 1.0, r), cutoff=20)
        residuals[r] = lz.commutator_residual(rho, "A")
    grid = [residuals[r] for r in sorted(residuals)]
    monotone = all(a < b for a, b in zip(grid, grid[1:]))
    ok = residuals[0.0] < 1e-8 and residuals[0.5] > 1e-3 and monotone
    report(
        "criterion 09: truncated number-basis cross-check",
        ok,
        f"residual(0) {residuals[0.0]:.2e}, residual(0.5) {residuals[0.5]:.2e}, "
        f"monotone {monotone}",
    )


def test_criterion_10_local_unitary_invariance():
    rng = np.random.default_rng(1010)
    states = {
        "bell": lz.maximally_entangled(2),
        "witness": make_witness(),
        "random23": lz.random_density_matrix(2, 3, 1),
        "random33": lz.random_density_matrix(3, 3, 2),
    }
    tol = 1e-10
    worst = 0.0
    flips = 0
    for state in states.values():
        base = {s: lz.is_lazy(state, s, tol) for s in ("A", "B")}
        for _ in range(20):
            u = haar_unitary(state.dim_a, rng)
            v = haar_unitary(state.dim_b, rng)
            big = np.kron(u, v)
            rotated = lz.DensityMatrix(
                state.dim_a, state.dim_b, big @ state.data @ big.conj().T
            )
            for side in ("A", "B"):
                rotated_report = lz.is_lazy(rotated, side, tol)
                worst = max(
                    worst,
                    abs(
                        rotated_report.commutator_residual
                        - base[side].commutator_residual
                    ),
                )
                flips += rotated_report.is_lazy != base[side].is_lazy
    ok = worst <= 1e-11 and flips == 0
    report(
        "criterion 10: local-unitary invariance",
        ok,
        f"worst residual shift {worst:.2e}, verdict flips {flips}",
    )
