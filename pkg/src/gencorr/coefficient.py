"""Coefficient matrices of pure states across a bipartite cut."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InvalidInputError
from .linalg import DEFAULT_RANK_TOL, numerical_rank
from .states import PureState
from .subsets import Bipartition, complement_labels


@dataclass(frozen=True, eq=False)
class CoefficientMatrix:
    """Amplitudes reshaped with rows over ``row_side`` and columns over the rest.

    Within each side the lowest label is the most significant bit.
    """

    source_n: int
    row_side: Bipartition
    matrix: np.ndarray


def _as_cut(s, n: int) -> Bipartition:
    if isinstance(s, Bipartition):
        if s.n != n:
            raise InvalidInputError(f"cut is over {s.n} qubits, state has {n}")
        return s
    return Bipartition.of(n, s)


def reshape_amplitudes(amplitudes: np.ndarray, rows: Iterable[int], n: int) -> np.ndarray:
    """Raw reshape for any label subset ``rows`` (may be empty or everything)."""
    rows = tuple(sorted(rows))
    cols = complement_labels(n, rows)
    t = np.asarray(amplitudes).reshape([2] * n)
    t = t.transpose([q - 1 for q in rows + cols])
    return t.reshape(1 << len(rows), 1 << len(cols))


def coefficient_matrix(psi: PureState, s) -> CoefficientMatrix:
    cut = _as_cut(s, psi.n)
    m = reshape_amplitudes(psi.amplitudes, cut.members, psi.n)
    return CoefficientMatrix(psi.n, cut, m)


def cut_rank(psi: PureState, s, tol: float = DEFAULT_RANK_TOL) -> int:
    return numerical_rank(coefficient_matrix(psi, s).matrix, tol)
