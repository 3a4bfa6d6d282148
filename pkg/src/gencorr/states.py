"""Pure and mixed qubit states plus a catalog of named states.

Four-qubit catalog states use labels A=1, B=2, C=3, D=4.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt
from typing import Sequence

import numpy as np

from .errors import InvalidInputError
from .linalg import as_matrix, is_hermitian, product_in_label_order, qubit_count, reorder_qubits

NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over ``n`` qubits."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(a)):
            raise InvalidInputError("amplitudes must be finite")
        qubit_count(a.size)
        norm = np.linalg.norm(a)
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidInputError(f"state norm is {norm!r}, expected 1")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @property
    def n(self) -> int:
        return qubit_count(self.amplitudes.size)

    @classmethod
    def normalized(cls, amplitudes) -> "PureState":
        a = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(a)
        if norm == 0:
            raise InvalidInputError("cannot normalize the zero vector")
        return cls(a / norm)

    @classmethod
    def basis(cls, bits: str) -> "PureState":
        """Computational basis state, e.g. ``PureState.basis("010")``."""
        if not bits or set(bits) - {"0", "1"}:
            raise InvalidInputError(f"not a bitstring: {bits!r}")
        a = np.zeros(1 << len(bits), dtype=complex)
        a[int(bits, 2)] = 1
        return cls(a)

    def density(self) -> "MixedState":
        return MixedState(np.outer(self.amplitudes, self.amplitudes.conj()))

    def tensor(self, other: "PureState") -> "PureState":
        return PureState(np.kron(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class MixedState:
    """Density matrix on ``n`` qubits: Hermitian, unit trace, PSD."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(as_matrix(self.matrix))
        qubit_count(m.shape[0])
        if m.shape[0] != m.shape[1]:
            raise InvalidInputError(f"density matrix must be square, got {m.shape}")
        if not is_hermitian(m, NORM_TOL):
            raise InvalidInputError("density matrix is not Hermitian within 1e-10")
        tr = np.trace(m).real
        if abs(tr - 1.0) > NORM_TOL:
            raise InvalidInputError(f"trace is {tr!r}, expected 1")
        if np.linalg.eigvalsh((m + m.conj().T) / 2)[0] < -NORM_TOL:
            raise InvalidInputError("density matrix has a negative eigenvalue")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return qubit_count(self.matrix.shape[0])

    def tensor(self, other: "MixedState") -> "MixedState":
        return MixedState(np.kron(self.matrix, other.matrix))


@dataclass(frozen=True, eq=False)
class SymmetricState:
    """Permutation-symmetric state given by coefficients over normalized Dicke states."""

    dicke_coeffs: np.ndarray

    def __post_init__(self):
        a = np.array(self.dicke_coeffs, dtype=complex).reshape(-1)
        if a.size < 2:
            raise InvalidInputError("need at least n + 1 = 2 coefficients")
        if abs(np.linalg.norm(a) - 1.0) > NORM_TOL:
            raise InvalidInputError("Dicke coefficients must have unit norm")
        a.setflags(write=False)
        object.__setattr__(self, "dicke_coeffs", a)

    @property
    def n(self) -> int:
        return self.dicke_coeffs.size - 1

    def weight_amplitudes(self) -> np.ndarray:
        """Amplitude ``c_l`` carried by each weight-``l`` basis string."""
        n = self.n
        return np.array([a / sqrt(comb(n, l)) for l, a in enumerate(self.dicke_coeffs)])


def _weights(n: int) -> np.ndarray:
    return np.array([bin(i).count("1") for i in range(1 << n)])


def dicke(n: int, ell: int) -> PureState:
    if n < 1 or not 0 <= ell <= n:
        raise InvalidInputError(f"need 0 <= ell <= n, got n={n}, ell={ell}")
    a = np.where(_weights(n) == ell, 1 / sqrt(comb(n, ell)), 0).astype(complex)
    return PureState(a)


def symmetric_to_pure(s: SymmetricState) -> PureState:
    c = s.weight_amplitudes()
    return PureState(c[_weights(s.n)])


def ghz(n: int) -> PureState:
    if n < 1:
        raise InvalidInputError("n must be positive")
    a = np.zeros(1 << n, dtype=complex)
    a[0] = a[-1] = 1 / sqrt(2)
    return PureState(a)


def w(n: int) -> PureState:
    return dicke(n, 1)


def bell(x: int, y: int) -> PureState:
    """``(|0,y> + (-1)^x |1,not y>) / sqrt(2)``."""
    if x not in (0, 1) or y not in (0, 1):
        raise InvalidInputError(f"bits must be 0 or 1, got x={x}, y={y}")
    return PureState(_bell_unnormalized(x, y) / sqrt(2))


def _bell_unnormalized(x: int, y: int) -> np.ndarray:
    v = np.zeros(4, dtype=complex)
    v[y] = 1
    v[2 + (1 - y)] = (-1) ** x
    return v


def swapping_state() -> PureState:
    """``(1/2) sum_xy |b_xy>_AB |b_xy>_CD`` on qubits A, B, C, D."""
    # built from the integer vectors sqrt(2)|b_xy> so the entries are exact dyadics
    a = sum(np.kron(_bell_unnormalized(x, y), _bell_unnormalized(x, y)) for x in (0, 1) for y in (0, 1))
    return PureState(a / 4)


def smolin() -> MixedState:
    """``(1/4) sum_xy |b_xy><b_xy|_AB (x) |b_xy><b_xy|_CD``."""
    rho = np.zeros((16, 16), dtype=complex)
    for x in (0, 1):
        for y in (0, 1):
            v = _bell_unnormalized(x, y)
            p = np.outer(v, v.conj())
            rho += np.kron(p, p)
    return MixedState(rho / 16)


def _check_p(p: float) -> float:
    p = float(p)
    if not 0 < p < 1:
        raise InvalidInputError(f"mixing weight p must lie in (0, 1), got {p}")
    return p


def ghz_w_mixture(p: float, n: int = 3) -> MixedState:
    p = _check_p(p)
    return MixedState(p * ghz(n).density().matrix + (1 - p) * w(n).density().matrix)


def dicke_mixture(n: int, ell: int, ell_prime: int, p: float) -> MixedState:
    p = _check_p(p)
    if ell == ell_prime:
        raise InvalidInputError("the two excitation numbers must differ")
    return MixedState(
        p * dicke(n, ell).density().matrix + (1 - p) * dicke(n, ell_prime).density().matrix
    )


def maximally_mixed(n: int) -> MixedState:
    d = 1 << n
    return MixedState(np.eye(d) / d)


def permute_qubits(state, perm: Sequence[int]):
    """Relabel qubits: the qubit currently labelled ``q`` becomes label ``perm[q-1]``."""
    if isinstance(state, PureState):
        return PureState(reorder_qubits(state.amplitudes, perm))
    return MixedState(reorder_qubits(state.matrix, perm))


# -- random generators -------------------------------------------------------
# amplitudes are standard complex Gaussian, then normalized (Haar on the sphere)


def _gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _check_sizes(n: int, sizes: Sequence[int]) -> list[int]:
    sizes = [int(s) for s in sizes]
    if not sizes or any(s < 1 for s in sizes) or sum(sizes) != n:
        raise InvalidInputError(f"partition sizes {sizes} must be positive and sum to {n}")
    return sizes


def random_pure(n: int, seed) -> PureState:
    if n < 1:
        raise InvalidInputError("n must be positive")
    rng = np.random.default_rng(seed)
    return PureState.normalized(_gaussian(rng, 1 << n))


def random_density(n: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    """``G G^dagger / tr`` for a complex Gaussian ``2^n x rank`` matrix ``G``."""
    if not 1 <= rank <= 1 << n:
        raise InvalidInputError(f"rank {rank} out of range for n={n}")
    g = _gaussian(rng, (1 << n, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_mixed(n: int, rank: int, seed) -> MixedState:
    return MixedState(random_density(n, rank, np.random.default_rng(seed)))


def _blocks(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    out, start = [], 1
    for s in sizes:
        out.append(tuple(range(start, start + s)))
        start += s
    return out


def random_product(n: int, sizes: Sequence[int], seed) -> PureState:
    """Tensor product of independent random pure factors on consecutive qubit blocks."""
    sizes = _check_sizes(n, sizes)
    rng = np.random.default_rng(seed)
    parts = []
    for labels in _blocks(sizes):
        v = _gaussian(rng, 1 << len(labels))
        parts.append((labels, v / np.linalg.norm(v)))
    return PureState.normalized(product_in_label_order(parts, n))


def random_mixed_product(n: int, sizes: Sequence[int], ranks: Sequence[int], seed) -> MixedState:
    """Tensor product of independent random density matrices of the given ranks."""
    sizes = _check_sizes(n, sizes)
    if len(ranks) != len(sizes):
        raise InvalidInputError("need one rank per factor")
    rng = np.random.default_rng(seed)
    parts = [(labels, random_density(len(labels), r, rng)) for labels, r in zip(_blocks(sizes), ranks)]
    rho = product_in_label_order(parts, n)
    return MixedState((rho + rho.conj().T) / 2)
