"""Genuine correlations of mixed states.

Two independent routes decide whether ``rho`` is a product across some cut:

* the purification route: write ``rho = sum_s lam_s |Phi_s><Phi_s|``, embed
  it into a pure state on ``n + a + b`` qubits with one-hot ancilla registers
  for each factorization ``R = a * b`` of the spectral rank, and look for a
  rank-1 coefficient matrix across ``S + (first ancilla register)``;
* the marginal oracle: ``rho`` is a product across ``S`` iff it equals the
  tensor product of its two marginals.

The oracle is cheap and exact, so it is the default verdict; the
purification route is kept alongside it for cross-validation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional, Sequence, Union

import numpy as np

from .coefficient import reshape_amplitudes
from .errors import CapacityError, CrossValidationError, InvalidFactorizationError, InvalidInputError
from .linalg import (
    DEFAULT_RANK_TOL,
    DEFAULT_ZERO_TOL,
    hermitian_eigensystem,
    numerical_rank,
    partial_trace,
    product_in_label_order,
)
from .pure import is_genuine_pure
from .states import MixedState, PureState
from .subsets import Bipartition, canonical_cuts, k_subsets

MAX_ORACLE_QUBITS = 10
MAX_THEOREM3_RANK = 8
MAX_PURIFICATION_QUBITS = 18

State = Union[PureState, MixedState]


@dataclass(frozen=True)
class Tolerances:
    """Decision thresholds; ``density`` defaults to one decade above ``rank``."""

    rank: float = DEFAULT_RANK_TOL
    density: float = 1e-9
    zero: float = DEFAULT_ZERO_TOL

    @classmethod
    def from_rank(cls, tol: float) -> "Tolerances":
        return cls(rank=tol, density=10 * tol)


DEFAULT_TOLS = Tolerances()


# -- spectral decomposition and purification ---------------------------------


def spectral_decompose(rho: MixedState, zero_tol: float = DEFAULT_ZERO_TOL) -> tuple[list[tuple[float, PureState]], int]:
    es = hermitian_eigensystem(rho.matrix, zero_tol)
    pairs = [(float(lam), PureState.normalized(es.eigenvectors[:, i])) for i, lam in enumerate(es.eigenvalues)]
    return pairs, es.rank


@dataclass(frozen=True, eq=False)
class Purification:
    """Pure state on ``n + a + b`` qubits whose first ``n`` qubits carry ``rho``.

    ``assignment[s] = (i, j)`` places eigenpair ``s`` in grid row ``i`` and
    column ``j`` (0-based); the ancillas are then ``|e_i>_a (x) |e_j>_b`` with
    ``e_i`` the one-hot string whose ``i``-th qubit from the left is set.
    """

    n: int
    a: int
    b: int
    assignment: tuple[tuple[int, int], ...]
    state: PureState

    @property
    def ancilla_a(self) -> tuple[int, ...]:
        return tuple(range(self.n + 1, self.n + self.a + 1))

    @property
    def ancilla_b(self) -> tuple[int, ...]:
        return tuple(range(self.n + self.a + 1, self.n + self.a + self.b + 1))

    def reduced(self) -> np.ndarray:
        """Trace out both ancilla registers."""
        m = self.n
        total = self.state.n
        psi = reshape_amplitudes(self.state.amplitudes, range(1, m + 1), total)
        return psi @ psi.conj().T


def identity_assignment(a: int, b: int) -> tuple[tuple[int, int], ...]:
    return tuple((s // b, s % b) for s in range(a * b))


def build_purification(eigenpairs: Sequence[tuple[float, PureState]], a: int, b: int, assignment=None) -> Purification:
    r = len(eigenpairs)
    if a < 1 or b < 1 or a * b != r:
        raise InvalidFactorizationError(f"grid {a}x{b} does not match rank {r}")
    assignment = identity_assignment(a, b) if assignment is None else tuple(tuple(c) for c in assignment)
    if len(assignment) != r or sorted(assignment) != sorted(identity_assignment(a, b)):
        raise InvalidFactorizationError(f"assignment {assignment} is not a bijection onto the {a}x{b} grid")
    n = eigenpairs[0][1].n
    if n + a + b > MAX_PURIFICATION_QUBITS:
        raise CapacityError(
            f"purification needs {n + a + b} qubits, limit is {MAX_PURIFICATION_QUBITS}",
            "MAX_PURIFICATION_QUBITS",
        )
    anc = np.zeros((r, 1 << (a + b)), dtype=complex)
    for s, (i, j) in enumerate(assignment):
        anc[s, (1 << (a - 1 - i)) * (1 << b) + (1 << (b - 1 - j))] = 1
    vecs = np.array([np.sqrt(lam) * v.amplitudes for lam, v in eigenpairs])
    full = np.einsum("sx,sy->xy", vecs, anc).reshape(-1)
    return Purification(n, a, b, assignment, PureState.normalized(full))


def factor_pairs(r: int) -> list[tuple[int, int]]:
    return [(a, r // a) for a in range(1, r + 1) if r % a == 0]


def grid_assignments(a: int, b: int):
    """One assignment per orbit under row and column permutations of the grid.

    Representative: eigenpair 0 at cell (0, 0), row 0 increasing left to
    right, column 0 increasing top to bottom, interior cells free.  There
    are ``R! / (a! b!)`` of them.
    """
    r = a * b
    others = range(1, r)
    for row0 in combinations(others, b - 1):
        left = [s for s in others if s not in row0]
        for col0 in combinations(left, a - 1):
            rest = [s for s in left if s not in col0]
            for interior in permutations(rest):
                grid = [[0] * b for _ in range(a)]
                grid[0] = [0, *row0]
                for i, s in enumerate(col0, start=1):
                    grid[i][0] = s
                it = iter(interior)
                for i in range(1, a):
                    for j in range(1, b):
                        grid[i][j] = next(it)
                assignment = [None] * r
                for i in range(a):
                    for j in range(b):
                        assignment[grid[i][j]] = (i, j)
                yield tuple(assignment)


def _spectrum_fits(lams: Sequence[float], assignment, a: int, b: int, rtol: float = 1e-7) -> bool:
    """Whether the eigenvalue grid can be an outer product ``p_i q_j``."""
    grid = np.zeros((a, b))
    for lam, (i, j) in zip(lams, assignment):
        grid[i, j] = lam
    return numerical_rank(grid, rtol) == 1


# -- purification route ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Theorem3Witness:
    a: int
    b: int
    assignment: tuple[tuple[int, int], ...]
    cut: Bipartition
    purification: Purification


@dataclass(frozen=True, eq=False)
class Theorem3Result:
    genuine: bool
    rank: int
    witness: Optional[Theorem3Witness] = None
    purifications_checked: int = 0


def _reference(dim: int) -> np.ndarray:
    # fixed generic vector for phase gauge; any vector with no special structure works
    k = np.arange(dim)
    return np.exp(1j * (0.7 + 2.399963 * k)) * (1.0 + 0.31 * np.sin(1.3 * k + 0.4))


def _gauge_for_cut(pairs, cut: Bipartition, tol: float) -> list[tuple[float, PureState]]:
    """Fix eigenvector phases so product eigenvectors carry canonical factor phases.

    Eigenvectors are only defined up to phase; for ``rho1 (x) rho2`` the
    product eigenvectors come back as ``e^{i theta_ij} psi_i (x) phi_j`` and
    the stray phases would raise the purification rank.  Each eigenvector
    that is a product across ``cut`` is rotated so that both of its factors
    have a positive overlap with a fixed reference vector.
    """
    out = []
    for lam, v in pairs:
        c = reshape_amplitudes(v.amplitudes, cut.members, v.n)
        if numerical_rank(c, tol) == 1:
            u, _, vh = np.linalg.svd(c)
            left, right = u[:, 0], vh[0]
            ph = np.vdot(_reference(left.size), left) * np.vdot(_reference(right.size), right)
            v = PureState.normalized(v.amplitudes * np.conj(ph) / abs(ph))
        out.append((lam, v))
    return out


def theorem3_is_genuine(
    rho: MixedState,
    tol: float = DEFAULT_RANK_TOL,
    zero_tol: float = DEFAULT_ZERO_TOL,
    max_rank: int = MAX_THEOREM3_RANK,
) -> Theorem3Result:
    """Purification-based decision over every ``(a, b)``, grid assignment and cut."""
    n = rho.n
    if n < 2:
        raise InvalidInputError("need at least 2 qubits")
    pairs, r = spectral_decompose(rho, zero_tol)
    if r > max_rank:
        raise CapacityError(
            f"spectral rank {r} exceeds the purification limit {max_rank}; use the oracle method",
            "MAX_THEOREM3_RANK",
        )
    lams = [lam for lam, _ in pairs]
    checked = 0
    cuts = canonical_cuts(n)
    gauged = {cut: _gauge_for_cut(pairs, cut, tol) for cut in cuts}
    for a, b in factor_pairs(r):
        if n + a + b > MAX_PURIFICATION_QUBITS:
            raise CapacityError(
                f"purification needs {n + a + b} qubits, limit is {MAX_PURIFICATION_QUBITS}",
                "MAX_PURIFICATION_QUBITS",
            )
        for assignment in grid_assignments(a, b):
            if not _spectrum_fits(lams, assignment, a, b):
                continue
            for cut in cuts:
                pur = build_purification(gauged[cut], a, b, assignment)
                checked += 1
                rows = cut.members + pur.ancilla_a
                m = reshape_amplitudes(pur.state.amplitudes, rows, pur.state.n)
                if numerical_rank(m, tol) == 1:
                    w = Theorem3Witness(a, b, assignment, cut, pur)
                    return Theorem3Result(False, r, w, checked)
    return Theorem3Result(True, r, None, checked)


# -- marginal oracle -----------------------------------------------------------


def _density(state: State) -> np.ndarray:
    return state.density().matrix if isinstance(state, PureState) else state.matrix


def product_of_marginals(rho: np.ndarray, cut: Bipartition) -> np.ndarray:
    n = cut.n
    rest = cut.complement().members
    parts = [(cut.members, partial_trace(rho, cut.members, n)), (rest, partial_trace(rho, rest, n))]
    return product_in_label_order(parts, n)


def product_distance(rho: State, s) -> float:
    """Frobenius distance from ``rho`` to the product of its marginals across ``s``."""
    m = _density(rho)
    cut = s if isinstance(s, Bipartition) else Bipartition.of(rho.n, s)
    return float(np.linalg.norm(m - product_of_marginals(m, cut)))


def oracle_is_product_cut(rho: State, s, tol: float = 1e-9) -> bool:
    return product_distance(rho, s) < tol


def oracle_scan(rho: State, tol: float = 1e-9) -> Optional[Bipartition]:
    """First canonical cut across which ``rho`` is a product, or ``None``."""
    if rho.n > MAX_ORACLE_QUBITS:
        raise CapacityError(f"oracle scans are limited to {MAX_ORACLE_QUBITS} qubits", "MAX_ORACLE_QUBITS")
    for cut in canonical_cuts(rho.n):
        if oracle_is_product_cut(rho, cut, tol):
            return cut
    return None


def operator_rank_table(rho: MixedState, tol: float = DEFAULT_RANK_TOL) -> list[tuple[Bipartition, int]]:
    """Operator-Schmidt rank of ``rho`` across every canonical cut (1 iff product)."""
    n = rho.n
    table = []
    for cut in canonical_cuts(n):
        rest = cut.complement().members
        t = rho.matrix.reshape([2] * (2 * n))
        rows = [q - 1 for q in cut.members] + [n + q - 1 for q in cut.members]
        cols = [q - 1 for q in rest] + [n + q - 1 for q in rest]
        m = t.transpose(rows + cols).reshape(4 ** len(cut), 4 ** len(rest))
        table.append((cut, numerical_rank(m, tol)))
    return table


# -- combined driver -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CorrelationReport:
    genuine: bool
    method: str
    witness_cut: Optional[Bipartition] = None
    degree: Optional[int] = None
    factors: Optional[list] = None
    theorem3: Optional[Theorem3Result] = None
    notes: list = field(default_factory=list)


METHODS = ("theorem1", "theorem3", "oracle", "both")


def is_genuine(state: State, tol: Tolerances = DEFAULT_TOLS, method: Optional[str] = None) -> CorrelationReport:
    """Decide genuine ``n``-partite correlation.

    Pure states default to the coefficient-matrix rank scan (``theorem1``);
    mixed states default to the marginal oracle.  ``both`` runs the
    purification route and the oracle and raises
    :class:`CrossValidationError` if they disagree.
    """
    if method is None:
        method = "theorem1" if isinstance(state, PureState) else "oracle"
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}; choose from {METHODS}")
    if state.n < 2:
        return CorrelationReport(False, method, notes=["single qubit"])

    if method == "theorem1":
        if not isinstance(state, PureState):
            raise InvalidInputError("theorem1 applies to pure states only")
        genuine, cut = is_genuine_pure(state, tol.rank)
        if cut is not None and not oracle_is_product_cut(state, cut, tol.density):
            raise CrossValidationError(f"rank-1 cut {cut} not confirmed by the oracle", cut, None)
        return CorrelationReport(genuine, method, cut)

    rho = state.density() if isinstance(state, PureState) else state
    oracle_cut = oracle_scan(rho, tol.density) if method in ("oracle", "both") else None
    t3 = theorem3_is_genuine(rho, tol.rank, tol.zero) if method in ("theorem3", "both") else None

    if method == "oracle":
        return CorrelationReport(oracle_cut is None, method, oracle_cut)

    t3_cut = t3.witness.cut if t3.witness else None
    if t3_cut is not None and not oracle_is_product_cut(rho, t3_cut, tol.density):
        raise CrossValidationError(
            f"purification witness {t3_cut} not confirmed by the oracle", t3_cut, oracle_cut
        )
    if method == "theorem3":
        return CorrelationReport(t3.genuine, method, t3_cut, theorem3=t3)
    if t3.genuine != (oracle_cut is None):
        raise CrossValidationError(
            f"purification route says genuine={t3.genuine}, oracle says genuine={oracle_cut is None}",
            t3_cut,
            oracle_cut,
        )
    return CorrelationReport(t3.genuine, method, oracle_cut, theorem3=t3)


def _reduce(state: State, labels: Sequence[int]) -> State:
    if len(labels) == state.n:
        return state
    return MixedState(partial_trace(_density(state), labels, state.n))


def has_genuine_k(state: State, k: int, tol: Tolerances = DEFAULT_TOLS) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether some ``k``-qubit marginal is genuinely ``k``-partite correlated."""
    n = state.n
    if not 2 <= k <= n:
        raise InvalidInputError(f"need 2 <= k <= n, got k={k}, n={n}")
    for labels in k_subsets(n, k):
        if is_genuine(_reduce(state, labels), tol).genuine:
            return True, labels
    return False, None


def degree_with_witness(state: State, tol: Tolerances = DEFAULT_TOLS) -> tuple[int, Optional[tuple[int, ...]]]:
    for k in range(state.n, 1, -1):
        found, labels = has_genuine_k(state, k, tol)
        if found:
            return k, labels
    return 1, None


def degree_of_correlations(state: State, tol: Tolerances = DEFAULT_TOLS) -> int:
    """Largest ``k`` with a genuinely correlated ``k``-qubit marginal; 1 if none."""
    return degree_with_witness(state, tol)[0]


def factorize_mixed(rho: State, tol: Tolerances = DEFAULT_TOLS) -> list[tuple[tuple[int, ...], MixedState]]:
    """Split across oracle-confirmed product cuts until no factor splits further."""
    if isinstance(rho, PureState):
        rho = rho.density()
    factors = _split_mixed(tuple(range(1, rho.n + 1)), rho, tol)
    return sorted(factors, key=lambda f: f[0])


def _split_mixed(labels, rho: MixedState, tol: Tolerances):
    if rho.n > 1:
        cut = oracle_scan(rho, tol.density)
        if cut is not None:
            rest = cut.complement().members
            left = MixedState(partial_trace(rho.matrix, cut.members, rho.n))
            right = MixedState(partial_trace(rho.matrix, rest, rho.n))
            return _split_mixed(tuple(labels[q - 1] for q in cut), left, tol) + _split_mixed(
                tuple(labels[q - 1] for q in rest), right, tol
            )
    return [(labels, rho)]


def reassemble(factors, n: int) -> np.ndarray:
    return product_in_label_order([(labels, st.matrix) for labels, st in factors], n)
