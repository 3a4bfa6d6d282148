import itertools

import numpy as np
import pytest

ACCEPTANCE_LINES: list[str] = []


def brute_reduced(psi: np.ndarray, keep, n: int) -> np.ndarray:
    """Reduced density matrix by explicit summation over bitstrings."""
    keep = sorted(keep)
    rest = [q for q in range(1, n + 1) if q not in keep]
    d = 1 << len(keep)
    out = np.zeros((d, d), dtype=complex)

    def index(kbits, rbits):
        bits = [0] * n
        for q, b in zip(keep, kbits):
            bits[q - 1] = b
        for q, b in zip(rest, rbits):
            bits[q - 1] = b
        return int("".join(map(str, bits)), 2)

    for rbits in itertools.product((0, 1), repeat=len(rest)):
        for i, ki in enumerate(itertools.product((0, 1), repeat=len(keep))):
            for j, kj in enumerate(itertools.product((0, 1), repeat=len(keep))):
                out[i, j] += psi[index(ki, rbits)] * np.conj(psi[index(kj, rbits)])
    return out


def brute_is_product(psi: np.ndarray, keep, n: int, tol: float = 1e-9) -> bool:
    """A pure state is a product across ``keep`` iff that marginal is pure."""
    rho = brute_reduced(psi, keep, n)
    return abs(np.trace(rho @ rho).real - 1.0) < tol


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
