"""Dense complex linear algebra for small qubit registers.

Everything here works on plain ``numpy`` arrays.  Qubit ``1`` is the most
significant bit of an amplitude index, so the amplitude of ``|q1 q2 ... qn>``
sits at index ``q1*2**(n-1) + ... + qn``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInputError

DEFAULT_RANK_TOL = 1e-10
DEFAULT_ZERO_TOL = 1e-12
HERMITIAN_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Validated complex 2-D array; 1-D input becomes a single column."""
    a = np.asarray(m, dtype=complex)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2 or a.size == 0:
        raise InvalidInputError(f"expected a non-empty matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("matrix has non-finite entries")
    return a


def singular_values(m) -> np.ndarray:
    """Singular values in descending order, ``min(rows, cols)`` of them."""
    return np.linalg.svd(as_matrix(m), compute_uv=False)


def numerical_rank(m, tol: float = DEFAULT_RANK_TOL) -> int:
    """Number of singular values above ``tol * sigma_max``; 0 for a zero matrix."""
    if tol <= 0:
        raise InvalidInputError(f"tol must be positive, got {tol}")
    s = singular_values(m)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


@dataclass(frozen=True)
class EigenSystem:
    """Retained eigenpairs of a Hermitian matrix, eigenvalues descending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns

    @property
    def rank(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    return m.shape[0] == m.shape[1] and bool(np.max(np.abs(m - m.conj().T)) <= tol)


def hermitian_eigensystem(m, zero_tol: float = DEFAULT_ZERO_TOL) -> EigenSystem:
    """Eigenpairs with eigenvalue above ``zero_tol * trace(m)``.

    The number of pairs kept is the spectral rank used to size purifications.
    """
    a = as_matrix(m)
    if not is_hermitian(a):
        raise InvalidInputError("matrix is not Hermitian within 1e-10")
    a = (a + a.conj().T) / 2
    w, v = np.linalg.eigh(a)
    order = np.argsort(w)[::-1]
    w, v = w[order], v[:, order]
    cutoff = zero_tol * float(np.real(np.trace(a)))
    keep = w > cutoff
    return EigenSystem(w[keep].copy(), v[:, keep].copy())


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product; two 1-D vectors give a 1-D vector."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim == 1 and b.ndim == 1:
        return np.kron(as_matrix(a)[:, 0], as_matrix(b)[:, 0])
    return np.kron(as_matrix(a), as_matrix(b))


def qubit_count(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 1 or 1 << n != dim:
        raise InvalidInputError(f"dimension {dim} is not a power of two")
    return n


def _check_labels(labels: Sequence[int], n: int) -> tuple[int, ...]:
    labels = tuple(int(q) for q in labels)
    if len(set(labels)) != len(labels) or any(not 1 <= q <= n for q in labels):
        raise InvalidInputError(f"invalid qubit labels {labels} for n={n}")
    return labels


def partial_trace(rho, keep: Iterable[int], n: int) -> np.ndarray:
    """Reduced density matrix on the qubits in ``keep`` (kept in label order).

    ``keep`` must be a non-empty proper subset of ``1..n``.
    """
    rho = as_matrix(rho)
    if rho.shape != (1 << n, 1 << n):
        raise InvalidInputError(f"expected a {1 << n}x{1 << n} matrix, got {rho.shape}")
    keep = tuple(sorted(_check_labels(tuple(keep), n)))
    if not 1 <= len(keep) <= n - 1:
        raise InvalidInputError(f"keep must be a non-empty proper subset, got {keep}")
    t = rho.reshape([2] * (2 * n))
    # row index letters, column letters; traced qubits share a letter
    letters = [chr(ord("a") + i) for i in range(n)] + [chr(ord("A") + i) for i in range(n)]
    rows = letters[:n]
    cols = [letters[n + q - 1] if q in keep else letters[q - 1] for q in range(1, n + 1)]
    out = "".join(rows[q - 1] for q in keep) + "".join(cols[q - 1] for q in keep)
    reduced = np.einsum("".join(rows) + "".join(cols) + "->" + out, t)
    d = 1 << len(keep)
    return reduced.reshape(d, d)


def reorder_qubits(x, order: Sequence[int]) -> np.ndarray:
    """Bring a vector or density matrix into label order.

    ``order[k]`` is the label carried by the ``k``-th tensor slot of ``x``.
    For instance ``reorder_qubits(kron(a_13, b_24), [1, 3, 2, 4])`` gives the
    state in slot order 1, 2, 3, 4.
    """
    x = np.asarray(x, dtype=complex)
    n = len(order)
    order = _check_labels(order, n)
    perm = list(np.argsort(order))
    if x.ndim == 1:
        return x.reshape([2] * n).transpose(perm).reshape(-1)
    t = x.reshape([2] * (2 * n))
    return t.transpose(perm + [p + n for p in perm]).reshape(x.shape)


def product_in_label_order(parts: Sequence[tuple[Sequence[int], np.ndarray]], n: int) -> np.ndarray:
    """Tensor together ``(labels, vector-or-matrix)`` parts and reorder to ``1..n``."""
    order: list[int] = []
    acc = None
    for labels, x in parts:
        order.extend(labels)
        acc = np.asarray(x, dtype=complex) if acc is None else tensor_product(acc, x)
    if sorted(order) != list(range(1, n + 1)):
        raise InvalidInputError(f"parts cover labels {sorted(order)}, expected 1..{n}")
    return reorder_qubits(acc, order)


def independent_columns(m, tol: float = DEFAULT_RANK_TOL) -> tuple[list[int], dict[int, np.ndarray]]:
    """Pick ``k = numerical_rank(m, tol)`` basis columns and express the rest over them.

    Returns ``(pivots, coeffs)`` where ``pivots`` is ascending and
    ``coeffs[j]`` holds ``t`` with ``m[:, j] ~= m[:, pivots] @ t`` for every
    non-pivot column ``j``.  Columns are scanned left to right so that, as
    in the textbook construction, the earliest independent columns become
    pivots whenever they are well conditioned.
    """
    a = as_matrix(m)
    k = numerical_rank(a, tol)
    ncols = a.shape[1]
    if k == 0:
        return [], {j: np.zeros(0, dtype=complex) for j in range(ncols)}

    # selection runs on the rank-k part so noise below tol cannot create pivots
    _, s, vh = np.linalg.svd(a, full_matrices=False)
    w = s[:k, None] * vh[:k]  # k x ncols, same column geometry as the rank-k part
    # reject nearly dependent columns so the coefficients stay bounded
    accept = 1e-3 * s[k - 1]

    basis = np.zeros((k, 0), dtype=complex)
    pivots: list[int] = []

    def residual(j):
        c = w[:, j]
        return c - basis @ (basis.conj().T @ c)

    for j in range(ncols):
        if len(pivots) == k:
            break
        r = residual(j)
        norm = np.linalg.norm(r)
        if norm > accept:
            basis = np.hstack([basis, (r / norm)[:, None]])
            pivots.append(j)
    while len(pivots) < k:
        # badly scaled directions: fall back to largest-residual pivoting
        rest = [j for j in range(ncols) if j not in pivots]
        norms = [np.linalg.norm(residual(j)) for j in rest]
        j = rest[int(np.argmax(norms))]
        r = residual(j)
        basis = np.hstack([basis, (r / np.linalg.norm(r))[:, None]])
        pivots.append(j)
    pivots.sort()

    piv = a[:, pivots]
    others = [j for j in range(ncols) if j not in pivots]
    coeffs: dict[int, np.ndarray] = {}
    if others:
        t, *_ = np.linalg.lstsq(piv, a[:, others], rcond=None)
        for col, j in enumerate(others):
            coeffs[j] = t[:, col]
    return pivots, coeffs


def frobenius_distance(a, b) -> float:
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))

