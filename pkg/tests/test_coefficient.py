import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gencorr.coefficient import coefficient_matrix, cut_rank
from gencorr.errors import InvalidInputError
from gencorr.states import PureState, dicke, ghz, permute_qubits, random_product, random_pure, swapping_state
from gencorr.subsets import Bipartition, canonical_cuts

EQ17 = 0.5 * np.array([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]])
R3 = 1 / np.sqrt(3)


def test_canonical_cuts_order_and_count():
    cuts = canonical_cuts(4)
    assert len(cuts) == 2**3 - 1
    assert [c.members for c in cuts] == [(1,), (1, 2), (1, 3), (1, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4)]
    assert canonical_cuts(4, reverse=True) == cuts[::-1]


def test_bipartition_validation():
    with pytest.raises(InvalidInputError):
        Bipartition(3, (1, 2, 3))
    with pytest.raises(InvalidInputError):
        Bipartition(3, (2, 1))
    with pytest.raises(InvalidInputError):
        Bipartition(3, (0,))
    with pytest.raises(InvalidInputError):
        Bipartition.of(3, [1, 1])
    assert Bipartition.of(4, [3, 1]).complement().members == (2, 4)


def test_swapping_state_ac():
    cm = coefficient_matrix(swapping_state(), [1, 3])
    assert cm.matrix.shape == (4, 4)
    assert np.array_equal(cm.matrix, EQ17)


def test_basis_and_w_examples():
    psi = PureState.basis("01")
    assert np.array_equal(coefficient_matrix(psi, [1]).matrix, [[0, 1], [0, 0]])
    expected = np.array([[0, R3, R3, 0], [R3, 0, 0, 0]])
    assert np.allclose(coefficient_matrix(dicke(3, 1), [1]).matrix, expected)


def test_entry_convention():
    # entry (i, j): S bits spell i, complement bits spell j, lowest label most significant
    psi = random_pure(4, 3)
    cm = coefficient_matrix(psi, Bipartition(4, (2, 4)))
    for idx in range(16):
        bits = format(idx, "04b")
        i = int(bits[1] + bits[3], 2)
        j = int(bits[0] + bits[2], 2)
        assert cm.matrix[i, j] == psi.amplitudes[idx]


def test_cut_rank_examples():
    for n, ell in [(3, 1), (4, 2), (5, 2)]:
        assert cut_rank(dicke(n, ell), range(1, ell + 1)) == ell + 1
    assert cut_rank(ghz(3), [1]) == 2
    psi = random_product(5, [2, 3], 9)
    assert cut_rank(psi, [1, 2]) == 1


def test_dicke_rank_is_min_side_plus_one():
    # the rank across S = {1..l} is min(l, n - l) + 1; it equals l + 1 only when l <= n - l
    for n in range(3, 8):
        for ell in range(1, n):
            assert cut_rank(dicke(n, ell), range(1, ell + 1)) == min(ell, n - ell) + 1


def test_invalid_subset():
    with pytest.raises(InvalidInputError):
        coefficient_matrix(ghz(3), [1, 2, 3])
    with pytest.raises(InvalidInputError):
        coefficient_matrix(ghz(3), Bipartition(4, (1,)))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_transpose_duality_and_norm(n, seed):
    psi = random_pure(n, seed)
    for cut in canonical_cuts(n):
        m = coefficient_matrix(psi, cut).matrix
        mc = coefficient_matrix(psi, cut.complement()).matrix
        assert np.array_equal(mc, m.T)
        assert abs(np.sum(np.abs(m) ** 2) - 1) < 1e-10
        assert cut_rank(psi, cut) == cut_rank(psi, cut.complement())


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32 - 1), st.permutations(range(1, 6)))
def test_permutation_consistency(n, seed, perm):
    perm = [p for p in perm if p <= n]
    psi = random_product(n, [1, n - 1], seed) if seed % 2 else random_pure(n, seed)
    moved = permute_qubits(psi, perm)
    for cut in canonical_cuts(n):
        image = Bipartition.of(n, [perm[q - 1] for q in cut])
        assert cut_rank(psi, cut) == cut_rank(moved, image)
