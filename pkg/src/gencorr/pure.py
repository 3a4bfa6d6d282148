"""Genuine-correlation analysis of pure states by coefficient-matrix rank.

A pure state is genuinely ``n``-partite correlated exactly when no cut has a
rank-1 coefficient matrix.  Rank-1 cuts are split off recursively to obtain
the factorization into genuinely correlated pieces; the degree of
correlations is the size of the largest piece.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt
from typing import Optional

import numpy as np

from .coefficient import coefficient_matrix, cut_rank
from .errors import InvalidInputError, NotAProductError
from .linalg import DEFAULT_RANK_TOL, independent_columns, numerical_rank, product_in_label_order, reorder_qubits
from .states import PureState, SymmetricState
from .subsets import Bipartition, canonical_cuts

PHASE_FLOOR = 1e-12


def canonical_phase(v: np.ndarray) -> tuple[np.ndarray, complex]:
    """Rotate ``v`` so its first non-negligible entry is real positive.

    Returns ``(rotated, phase)`` with ``v == phase * rotated``.
    """
    mags = np.abs(v)
    idx = int(np.argmax(mags > PHASE_FLOOR * mags.max()))
    phase = v[idx] / mags[idx]
    return v / phase, complex(phase)


@dataclass(frozen=True, eq=False)
class Factorization:
    """Product of genuinely correlated factors, each on a set of original labels."""

    n: int
    factors: list[tuple[tuple[int, ...], PureState]]
    global_phase: complex = 1.0

    def subsets(self) -> list[tuple[int, ...]]:
        return [labels for labels, _ in self.factors]

    def sizes(self) -> list[int]:
        return [len(labels) for labels, _ in self.factors]

    def reconstruct(self) -> np.ndarray:
        parts = [(labels, st.amplitudes) for labels, st in self.factors]
        return self.global_phase * product_in_label_order(parts, self.n)


@dataclass(frozen=True, eq=False)
class ProductTermSum:
    """``psi = sum_j left_j (x) right_j`` across ``cut`` with the minimal number of terms."""

    cut: Bipartition
    terms: list[tuple[np.ndarray, np.ndarray]]

    @property
    def k(self) -> int:
        return len(self.terms)

    def reconstruct(self) -> np.ndarray:
        c = sum(np.outer(left, right) for left, right in self.terms)
        order = self.cut.members + self.cut.complement().members
        return reorder_qubits(np.asarray(c).reshape(-1), order)


def is_genuine_pure(psi: PureState, tol: float = DEFAULT_RANK_TOL, reverse: bool = False) -> tuple[bool, Optional[Bipartition]]:
    """Scan canonical cuts; ``(False, cut)`` for the first rank-1 cut found."""
    if psi.n == 1:
        return False, None
    for cut in canonical_cuts(psi.n, reverse):
        if cut_rank(psi, cut, tol) == 1:
            return False, cut
    return True, None


def cut_rank_table(psi: PureState, tol: float = DEFAULT_RANK_TOL) -> list[tuple[Bipartition, int]]:
    if psi.n == 1:
        return []
    return [(cut, cut_rank(psi, cut, tol)) for cut in canonical_cuts(psi.n)]


def factor_across(psi: PureState, s, tol: float = DEFAULT_RANK_TOL) -> tuple[PureState, PureState, complex]:
    """Split ``psi = phase * left (x) right`` across a rank-1 cut.

    Both factors are normalized with their first nonzero amplitude real
    positive; the leftover unit-modulus factor is returned as ``phase``.
    """
    cm = coefficient_matrix(psi, s)
    r = numerical_rank(cm.matrix, tol)
    if r != 1:
        raise NotAProductError(f"cut {cm.row_side} has rank {r}, not 1")
    u, sv, vh = np.linalg.svd(cm.matrix)
    left, ph_l = canonical_phase(u[:, 0])
    right, ph_r = canonical_phase(vh[0])
    return PureState.normalized(left), PureState.normalized(right), ph_l * ph_r


def factorize(psi: PureState, tol: float = DEFAULT_RANK_TOL, reverse: bool = False) -> Factorization:
    """Split along rank-1 cuts until every factor is a qubit or genuinely correlated.

    Cuts are tried in canonical order (or reversed); the first rank-1 cut
    is split.  The resulting set of factor label subsets does not depend on
    that order.
    """
    factors, phase = _split(tuple(range(1, psi.n + 1)), psi, tol, reverse)
    factors.sort(key=lambda f: f[0])
    return Factorization(psi.n, factors, phase)


def _split(labels, psi, tol, reverse):
    if psi.n > 1:
        for cut in canonical_cuts(psi.n, reverse):
            if cut_rank(psi, cut, tol) == 1:
                left, right, phase = factor_across(psi, cut, tol)
                lf, lp = _split(tuple(labels[q - 1] for q in cut), left, tol, reverse)
                rf, rp = _split(tuple(labels[q - 1] for q in cut.complement()), right, tol, reverse)
                return lf + rf, phase * lp * rp
    canon, phase = canonical_phase(psi.amplitudes)
    return [(labels, PureState(canon))], phase


def degree_pure(psi: PureState, tol: float = DEFAULT_RANK_TOL) -> int:
    return max(factorize(psi, tol).sizes())


def sum_of_products(psi: PureState, s, tol: float = DEFAULT_RANK_TOL) -> ProductTermSum:
    """Write ``psi`` as a sum of ``k = cut_rank`` product terms across ``s``.

    Term ``j`` pairs pivot column ``p_j`` of the coefficient matrix (the left
    vector) with ``|p_j> + sum_v t_jv |v>`` over the non-pivot columns ``v``.
    """
    cm = coefficient_matrix(psi, s)
    m = cm.matrix
    pivots, coeffs = independent_columns(m, tol)
    terms = []
    for j, p in enumerate(pivots):
        right = np.zeros(m.shape[1], dtype=complex)
        right[p] = 1
        for v, t in coeffs.items():
            right[v] = t[j]
        terms.append((m[:, p].copy(), right))
    return ProductTermSum(cm.row_side, terms)


@dataclass(frozen=True)
class SymmetricVerdict:
    kind: str  # "genuine" | "product" | "trivial_dicke0" | "trivial_dicken"
    alpha: Optional[complex] = None

    @property
    def genuine(self) -> bool:
        return self.kind == "genuine"


def classify_symmetric(s: SymmetricState, tol: float = DEFAULT_RANK_TOL) -> SymmetricVerdict:
    """Decide a symmetric state from its weight amplitudes alone.

    The state is a product iff the weight amplitudes ``c_l`` form a
    geometric progression, i.e. the two rows ``(c_0..c_{n-1})`` and
    ``(c_1..c_n)`` are proportional.  Column ``w`` is scaled by the number
    of weight-``w`` strings on ``n - 1`` qubits, which makes this ``2 x n``
    matrix share its singular values with the single-qubit coefficient
    matrix of the full state.
    """
    n = s.n
    if n < 2:
        raise InvalidInputError("classification needs n >= 2")
    c = s.weight_amplitudes()
    scale = np.array([sqrt(comb(n - 1, w)) for w in range(n)])
    h = np.vstack([c[:-1] * scale, c[1:] * scale])
    if numerical_rank(h, tol) > 1:
        return SymmetricVerdict("genuine")
    u, _, _ = np.linalg.svd(h)
    u0, u1 = u[:, 0]
    if abs(u1) <= tol:
        return SymmetricVerdict("trivial_dicke0")
    if abs(u0) <= tol:
        return SymmetricVerdict("trivial_dicken")
    return SymmetricVerdict("product", complex(u0 / u1))
