import math

import numpy as np
import pytest

from idamp.errors import (
    AmplitudeError,
    ExchangeClassError,
    MatrixShapeError,
    MatrixSizeError,
)
from idamp.kernels import (
    ExchangeClass,
    _ryser_gray_jit,
    _ryser_gray_reference,
    determinant,
    determinant_naive,
    distinguishable_probability,
    n_particle_amplitude,
    permanent_naive,
    permanent_ryser,
    two_particle_amplitude,
)
from idamp.sampling import unit_disk_matrix

BOSON = ExchangeClass.BOSON
FERMION = ExchangeClass.FERMION
DIST = ExchangeClass.DISTINGUISHABLE

S = math.sqrt(0.5)
BEAM_SPLITTER = np.array([[S, S], [S, -S]], dtype=np.complex128)


def test_permanent_naive_identity():
    assert permanent_naive(np.eye(3)) == 1 + 0j


def test_permanent_naive_hand_2x2():
    # 0.1*0.4 + 0.2*0.3 = 0.10
    value = permanent_naive([[0.1, 0.2], [0.3, 0.4]])
    assert value == pytest.approx(0.10, abs=1e-15)


def test_permanent_naive_zero_row():
    m = np.array([[0.1, 0.2], [0.0, 0.0]])
    assert permanent_naive(m) == 0j


def test_permanent_ryser_identity():
    assert permanent_ryser(np.eye(4)) == 1 + 0j


def test_permanent_ryser_constant_matrix():
    # n! * c^n for an all-c matrix
    assert permanent_ryser(np.full((3, 3), 0.5)) == pytest.approx(0.75, abs=1e-12)


@pytest.mark.parametrize("n", range(2, 9))
def test_permanent_oracle_equivalence(n, rng):
    for _ in range(25):
        m = unit_disk_matrix(rng, n)
        fast = permanent_ryser(m)
        slow = permanent_naive(m)
        assert abs(fast - slow) <= 1e-9 * max(1.0, abs(slow))


def test_ryser_reference_matches_jit(rng):
    if _ryser_gray_jit is None:
        pytest.skip("numba unavailable")
    for n in (2, 3, 5, 7):
        m = np.ascontiguousarray(unit_disk_matrix(rng, n))
        assert complex(_ryser_gray_jit(m)) == _ryser_gray_reference(m)


def test_permanent_ryser_zero_line_exact(rng):
    m = unit_disk_matrix(rng, 5)
    m[2, :] = 0
    assert permanent_ryser(m) == 0j
    m = unit_disk_matrix(rng, 5)
    m[:, 3] = 0
    assert permanent_ryser(m) == 0j


def test_size_caps():
    with pytest.raises(MatrixSizeError):
        permanent_naive(np.eye(11))
    with pytest.raises(MatrixSizeError):
        permanent_ryser(np.eye(25))


def test_non_square_rejected():
    with pytest.raises(MatrixShapeError):
        permanent_ryser(np.ones((2, 3)))
    with pytest.raises(MatrixShapeError):
        determinant(np.ones((2, 3)))


def test_determinant_identity():
    for n in (1, 2, 3, 5, 8):
        assert determinant(np.eye(n)) == 1 + 0j


def test_determinant_hand_2x2():
    assert determinant([[0.1, 0.2], [0.3, 0.4]]) == pytest.approx(-0.02, abs=1e-15)


def test_determinant_equal_columns_exact(rng):
    for n in (2, 3, 4, 6):
        m = unit_disk_matrix(rng, n)
        m[:, n - 1] = m[:, 0]
        assert determinant(m) == 0j


@pytest.mark.parametrize("n", range(2, 9))
def test_determinant_oracle_equivalence(n, rng):
    for _ in range(25):
        m = unit_disk_matrix(rng, n)
        fast = determinant(m)
        slow = determinant_naive(m)
        assert abs(fast - slow) <= 1e-9 * max(1.0, abs(slow))


def test_determinant_product_rule(rng):
    for n in (2, 3, 5, 8):
        a = unit_disk_matrix(rng, n) / math.sqrt(n)
        b = unit_disk_matrix(rng, n) / math.sqrt(n)
        lhs = determinant(a @ b)
        rhs = determinant(a) * determinant(b)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_pair_amplitude_identity_and_swap():
    eye = np.eye(2)
    swap = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    assert two_particle_amplitude(eye, BOSON) == 1 + 0j
    assert two_particle_amplitude(eye, FERMION) == 1 + 0j
    assert two_particle_amplitude(swap, BOSON) == 1 + 0j
    assert two_particle_amplitude(swap, FERMION) == -1 + 0j


def test_pair_amplitude_beam_splitter():
    # The two-photon coincidence amplitude vanishes for bosons.
    assert two_particle_amplitude(BEAM_SPLITTER, BOSON) == 0j
    fermion = two_particle_amplitude(BEAM_SPLITTER, FERMION)
    assert fermion == pytest.approx(-1.0, abs=1e-12)


def test_pair_amplitude_rejects_distinguishable():
    with pytest.raises(ExchangeClassError):
        two_particle_amplitude(np.eye(2), DIST)
    with pytest.raises(ExchangeClassError):
        n_particle_amplitude(np.eye(3), DIST)


def test_pair_amplitude_agrees_with_n_particle_exactly(rng):
    for _ in range(200):
        m = unit_disk_matrix(rng, 2)
        for cls in (BOSON, FERMION):
            assert two_particle_amplitude(m, cls) == n_particle_amplitude(m, cls)


def test_n_particle_permutation_matrices():
    cycle = np.zeros((3, 3))
    cycle[0, 1] = cycle[1, 2] = cycle[2, 0] = 1  # 3-cycle, even
    transposition = np.eye(3)[[0, 2, 1]]  # swap rows 2,3, odd
    assert n_particle_amplitude(np.eye(3), BOSON) == 1 + 0j
    assert n_particle_amplitude(np.eye(3), FERMION) == 1 + 0j
    assert n_particle_amplitude(cycle, BOSON) == 1 + 0j
    assert n_particle_amplitude(cycle, FERMION) == 1 + 0j
    assert n_particle_amplitude(transposition, BOSON) == 1 + 0j
    assert n_particle_amplitude(transposition, FERMION) == -1 + 0j


def test_n_particle_single_entry():
    assert n_particle_amplitude([[0.5 + 0.25j]], BOSON) == 0.5 + 0.25j
    assert n_particle_amplitude([[0.5 + 0.25j]], FERMION) == 0.5 + 0.25j


def test_multilinearity_in_columns(rng):
    for n in (2, 3, 4):
        for _ in range(50):
            m = unit_disk_matrix(rng, n)
            m2 = m.copy()
            col = int(rng.integers(n))
            m2[:, col] = unit_disk_matrix(rng, n, 1)[:, 0]
            merged = m.copy()
            merged[:, col] = m[:, col] + m2[:, col]
            for cls in (BOSON, FERMION):
                total = n_particle_amplitude(merged, cls)
                parts = n_particle_amplitude(m, cls) + n_particle_amplitude(m2, cls)
                assert abs(total - parts) <= 1e-12 * max(1.0, abs(total))


def test_zero_row_and_column_vanish_exactly(rng):
    for n in (2, 3, 4, 5):
        m = unit_disk_matrix(rng, n)
        m[1, :] = 0
        for cls in (BOSON, FERMION):
            assert n_particle_amplitude(m, cls) == 0j
        m = unit_disk_matrix(rng, n)
        m[:, 0] = 0
        for cls in (BOSON, FERMION):
            assert n_particle_amplitude(m, cls) == 0j


def test_conjugation_equivariance_exact(rng):
    for n in (2, 3, 4, 5, 6):
        for _ in range(50):
            m = unit_disk_matrix(rng, n)
            for cls in (BOSON, FERMION):
                assert n_particle_amplitude(np.conj(m), cls) == n_particle_amplitude(
                    m, cls
                ).conjugate()


def test_pauli_exclusion_repeated_columns(rng):
    for n in (2, 3, 4, 6):
        m = unit_disk_matrix(rng, n)
        m[:, 1] = m[:, 0]
        assert n_particle_amplitude(m, FERMION) == 0j


def test_distinguishable_probability_values():
    assert distinguishable_probability(np.eye(3)) == 1.0
    assert distinguishable_probability(BEAM_SPLITTER) == pytest.approx(0.5, abs=1e-12)
    zero_row = np.array([[0.5, 0.5], [0.0, 0.0]])
    assert distinguishable_probability(zero_row) == 0.0


def test_distinguishable_probability_row_check():
    with pytest.raises(AmplitudeError):
        distinguishable_probability(np.full((2, 2), 0.9))
