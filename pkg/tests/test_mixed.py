from itertools import permutations
from math import factorial

import numpy as np
import pytest

from gencorr import mixed
from gencorr.errors import CapacityError, CrossValidationError, InvalidFactorizationError
from gencorr.linalg import partial_trace, reorder_qubits
from gencorr.mixed import (
    Tolerances,
    build_purification,
    degree_of_correlations,
    factorize_mixed,
    grid_assignments,
    has_genuine_k,
    is_genuine,
    oracle_is_product_cut,
    reassemble,
    spectral_decompose,
    theorem3_is_genuine,
)
from gencorr.pure import degree_pure, factor_across, is_genuine_pure
from gencorr.states import (
    MixedState,
    PureState,
    bell,
    dicke_mixture,
    ghz,
    ghz_w_mixture,
    maximally_mixed,
    permute_qubits,
    random_mixed,
    random_mixed_product,
    random_product,
    random_pure,
    smolin,
    swapping_state,
    w,
)
from gencorr.subsets import Bipartition, canonical_cuts


def basis_vec(bits):
    v = np.zeros(1 << len(bits), dtype=complex)
    v[int(bits, 2)] = 1
    return v


def smolin_eigenpairs():
    return [(0.25, PureState(np.kron(bell(x, y).amplitudes, bell(x, y).amplitudes))) for x in (0, 1) for y in (0, 1)]


def bell_plus_mixed():
    return MixedState(np.kron(bell(0, 0).density().matrix, np.eye(2) / 2))


def test_spectral_decompose_examples():
    pairs, r = spectral_decompose(smolin())
    assert r == 4 and np.allclose([lam for lam, _ in pairs], 0.25)
    pairs, r = spectral_decompose(random_pure(3, 2).density())
    assert r == 1 and np.isclose(pairs[0][0], 1)
    for p in (0.3, 0.8):
        pairs, r = spectral_decompose(dicke_mixture(4, 1, 2, p))
        assert r == 2
        assert np.allclose([lam for lam, _ in pairs], [max(p, 1 - p), min(p, 1 - p)])
    pairs, _ = spectral_decompose(random_mixed(3, 5, 9))
    assert abs(sum(lam for lam, _ in pairs) - 1) < 1e-9
    vecs = np.array([v.amplitudes for _, v in pairs])
    assert np.allclose(vecs.conj() @ vecs.T, np.eye(5), atol=1e-10)


def eq21_state():
    """Eight-qubit purification written out term by term (AB, CD, EF, GH)."""
    terms = [
        (["00", "11"], ["00", "11"], [1, 1], "01", "01"),
        (["01", "10"], ["01", "10"], [1, 1], "01", "10"),
        (["00", "11"], ["00", "11"], [1, -1], "10", "01"),
        (["01", "10"], ["01", "10"], [1, -1], "10", "10"),
    ]
    v = np.zeros(256)
    for ab, cd, signs, ef, gh in terms:
        for s1, x in zip(signs, ab):
            for s2, y in zip(signs, cd):
                v[int(x + y + ef + gh, 2)] += s1 * s2 / 4
    return v


def test_purification_smolin_2x2_matches_written_out_state():
    pur = build_purification(smolin_eigenpairs(), 2, 2)
    amps = pur.state.amplitudes
    assert pur.state.n == 8
    assert np.count_nonzero(np.abs(amps) > 1e-12) == 16
    assert np.allclose(np.abs(amps[np.abs(amps) > 1e-12]), 0.25)
    # written-out form numbers the one-hot bit from the right, i.e. E<->F and G<->H swapped
    assert np.allclose(reorder_qubits(amps, [1, 2, 3, 4, 6, 5, 8, 7]), eq21_state())


def test_purification_smolin_1x4():
    pur = build_purification(smolin_eigenpairs(), 1, 4)
    onehots = ["1000", "0100", "0010", "0001"]
    expected = sum(
        np.sqrt(lam) * np.kron(np.kron(v.amplitudes, basis_vec("1")), basis_vec(h))
        for (lam, v), h in zip(smolin_eigenpairs(), onehots)
    )
    assert np.allclose(pur.state.amplitudes, expected)


def test_purification_of_pure_projector():
    psi = random_pure(3, 4)
    pairs, r = spectral_decompose(psi.density())
    pur = build_purification(pairs, 1, 1)
    overlap = np.vdot(np.kron(psi.amplitudes, basis_vec("11")), pur.state.amplitudes)
    assert np.isclose(abs(overlap), 1)


def test_purification_errors():
    pairs, _ = spectral_decompose(smolin())
    with pytest.raises(InvalidFactorizationError):
        build_purification(pairs, 3, 1)
    with pytest.raises(InvalidFactorizationError):
        build_purification(pairs, 2, 2, [(0, 0), (0, 0), (1, 0), (1, 1)])


def test_purification_invariants(rng):
    for _ in range(100):
        n = int(rng.integers(1, 5))
        r = int(rng.integers(1, min(4, 1 << n) + 1))
        rho = random_mixed(n, r, int(rng.integers(2**31)))
        pairs, rank = spectral_decompose(rho)
        assert rank == r
        for a, b in mixed.factor_pairs(r):
            for assignment in grid_assignments(a, b):
                pur = build_purification(pairs, a, b, assignment)
                assert np.linalg.norm(pur.reduced() - rho.matrix) < 1e-9
                if n + a + b <= 8:
                    traced = partial_trace(pur.state.density().matrix, range(1, n + 1), n + a + b)
                    assert np.linalg.norm(traced - rho.matrix) < 1e-9
                for idx in np.flatnonzero(np.abs(pur.state.amplitudes) > 1e-14):
                    bits = format(idx, f"0{n + a + b}b")
                    assert bits[n : n + a].count("1") == 1 and bits[n + a :].count("1") == 1


def canonical_orbit(assignment, a, b):
    """Smallest relabelled form over all row and column permutations (brute force)."""
    best = None
    for rp in permutations(range(a)):
        for cp in permutations(range(b)):
            form = tuple((rp[i], cp[j]) for i, j in assignment)
            best = form if best is None or form < best else best
    return best


@pytest.mark.parametrize("a,b", [(1, 1), (1, 3), (3, 1), (2, 2), (2, 3), (3, 2)])
def test_grid_assignments_cover_each_orbit_once(a, b):
    r = a * b
    reps = list(grid_assignments(a, b))
    assert len(reps) == factorial(r) // (factorial(a) * factorial(b))
    orbits = {canonical_orbit(rep, a, b) for rep in reps}
    assert len(orbits) == len(reps)
    cells = [(i, j) for i in range(a) for j in range(b)]
    all_orbits = {canonical_orbit(p, a, b) for p in permutations(cells)}
    assert orbits == all_orbits


def test_theorem3_examples():
    res = theorem3_is_genuine(smolin())
    assert res.genuine and res.rank == 4
    for p in (0.1, 0.5, 0.9):
        assert theorem3_is_genuine(ghz_w_mixture(p)).genuine
    res = theorem3_is_genuine(bell_plus_mixed())
    assert not res.genuine and res.witness.cut == Bipartition(3, (1, 2))
    assert (res.witness.a, res.witness.b) == (1, 2)
    assert oracle_is_product_cut(bell_plus_mixed(), [1, 2])


def test_theorem3_capacity():
    with pytest.raises(CapacityError):
        theorem3_is_genuine(random_mixed(4, 9, 1))
    assert theorem3_is_genuine(random_mixed(3, 5, 1), max_rank=5).genuine


def test_theorem3_witness_validity(rng):
    for _ in range(20):
        n = int(rng.integers(2, 5))
        n1 = int(rng.integers(1, n))
        ranks = [int(rng.integers(1, 3)), int(rng.integers(1, 3))]
        rho = random_mixed_product(n, [n1, n - n1], ranks, int(rng.integers(2**31)))
        rho = permute_qubits(rho, list(rng.permutation(n) + 1))
        res = theorem3_is_genuine(rho)
        assert not res.genuine
        wit = res.witness
        pur = wit.purification
        rows = wit.cut.members + pur.ancilla_a
        left, right, phase = factor_across(pur.state, rows)
        # left lives on S + ancilla_a, right on S^c + ancilla_b
        k = len(wit.cut)
        rho_s = partial_trace(left.density().matrix, range(1, k + 1), k + wit.a) if wit.a else left.density().matrix
        rest = n - k
        rho_c = partial_trace(right.density().matrix, range(1, rest + 1), rest + wit.b)
        rebuilt = reorder_qubits(np.kron(rho_s, rho_c), wit.cut.members + wit.cut.complement().members)
        assert np.linalg.norm(rebuilt - rho.matrix) < 1e-9


def test_oracle_examples(rng):
    rho = random_mixed_product(4, [2, 2], [3, 2], 5)
    assert oracle_is_product_cut(rho, [1, 2])
    assert not any(oracle_is_product_cut(smolin(), c) for c in canonical_cuts(4))
    assert oracle_is_product_cut(swapping_state().density(), [1, 3])
    assert not oracle_is_product_cut(swapping_state().density(), [1, 2])


def test_is_genuine_examples():
    rep = is_genuine(smolin(), method="both")
    assert rep.genuine and rep.witness_cut is None
    rep = is_genuine(random_mixed_product(4, [2, 2], [2, 2], 12), method="both")
    assert not rep.genuine and rep.witness_cut == Bipartition(4, (1, 2))
    assert is_genuine(dicke_mixture(4, 1, 2, 0.3)).genuine
    assert is_genuine(ghz(3)).method == "theorem1"
    assert is_genuine(smolin()).method == "oracle"


def test_is_genuine_surfaces_disagreement(monkeypatch):
    monkeypatch.setattr(mixed, "theorem3_is_genuine", lambda *a, **k: mixed.Theorem3Result(True, 2))
    with pytest.raises(CrossValidationError) as info:
        is_genuine(bell_plus_mixed(), method="both")
    assert info.value.oracle_witness == Bipartition(3, (1, 2))


def test_pure_mixed_consistency(rng):
    for i in range(40):
        n = int(rng.integers(2, 5))
        psi = random_pure(n, i) if i % 2 else random_product(n, [1, n - 1], i)
        expected = is_genuine_pure(psi)[0]
        for method in ("oracle", "theorem3", "both"):
            assert is_genuine(psi.density(), method=method).genuine == expected


def test_has_genuine_k_examples():
    # the two-qubit marginal of GHZ_4 is (|00><00| + |11><11|)/2, not the product I/4 of its marginals
    assert has_genuine_k(ghz(4), 2) == (True, (1, 2))
    assert has_genuine_k(PureState.basis("000"), 2) == (False, None)
    assert has_genuine_k(PureState.basis("000"), 3) == (False, None)
    psi = PureState(np.kron(ghz(2).amplitudes, [1, 0]))
    assert has_genuine_k(psi, 2) == (True, (1, 2))
    assert has_genuine_k(psi, 3) == (False, None)


def test_has_genuine_k_monotone(rng):
    for i in range(10):
        rho = random_mixed(4, 2, i)
        for k in (2, 3):
            found, labels = has_genuine_k(rho, k)
            if found:
                reduced = MixedState(partial_trace(rho.matrix, labels, 4))
                assert has_genuine_k(reduced, k)[0]


def test_degree_examples():
    assert degree_of_correlations(smolin()) == 4
    assert degree_of_correlations(PureState.basis("000")) == 1
    assert degree_of_correlations(PureState(np.kron(ghz(2).amplitudes, w(3).amplitudes))) == 3
    assert degree_of_correlations(maximally_mixed(3)) == 1


def test_degree_matches_pure_degree(rng):
    for i in range(15):
        n = int(rng.integers(2, 6))
        k = int(rng.integers(1, n + 1))
        psi = random_product(n, [k, n - k], i) if k < n else random_pure(n, i)
        psi = permute_qubits(psi, list(rng.permutation(n) + 1))
        assert degree_of_correlations(psi) == degree_pure(psi)


def test_factorize_mixed_examples(rng):
    qubits = [random_mixed(1, 2, s).matrix for s in range(3)]
    rho = MixedState(np.kron(np.kron(qubits[0], qubits[1]), qubits[2]))
    f = factorize_mixed(rho)
    assert [labels for labels, _ in f] == [(1,), (2,), (3,)]
    assert np.linalg.norm(reassemble(f, 3) - rho.matrix) < 1e-9

    assert [labels for labels, _ in factorize_mixed(smolin())] == [(1, 2, 3, 4)]

    rho = MixedState(np.kron(random_mixed(2, 3, 1).matrix, smolin().matrix))
    f = factorize_mixed(rho)
    assert sorted(len(labels) for labels, _ in f) == [2, 4]
    assert np.linalg.norm(reassemble(f, 6) - rho.matrix) < 1e-9


def test_tolerances_from_rank():
    t = Tolerances.from_rank(1e-8)
    assert t.rank == 1e-8 and t.density == pytest.approx(1e-7)
