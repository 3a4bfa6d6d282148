"""Qubit-label subsets and bipartite cuts.

Labels are 1-based, matching the usual ``1..n`` numbering of qubits.  A
:class:`Bipartition` stores only the row side ``S`` of an ``S | S^c`` cut.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidInputError


@dataclass(frozen=True)
class Bipartition:
    """Row side ``S`` of a cut of ``n`` qubits, ``1 <= |S| <= n - 1``."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(int(q) for q in self.members)
        if self.n < 2:
            raise InvalidInputError(f"a cut needs at least 2 qubits, got n={self.n}")
        if not 1 <= len(members) <= self.n - 1:
            raise InvalidInputError(
                f"cut side must have between 1 and {self.n - 1} qubits, got {members}"
            )
        if any(b <= a for a, b in zip(members, members[1:])):
            raise InvalidInputError(f"labels must be strictly increasing: {members}")
        if members[0] < 1 or members[-1] > self.n:
            raise InvalidInputError(f"labels {members} out of range 1..{self.n}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, n: int, labels: Iterable[int]) -> "Bipartition":
        """Build from an unordered iterable of labels (duplicates rejected)."""
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise InvalidInputError(f"duplicate labels in {labels}")
        return cls(n, tuple(sorted(labels)))

    def complement(self) -> "Bipartition":
        return Bipartition(self.n, complement_labels(self.n, self.members))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def complement_labels(n: int, labels: Iterable[int]) -> tuple[int, ...]:
    chosen = set(labels)
    return tuple(q for q in range(1, n + 1) if q not in chosen)


def canonical_cuts(n: int, reverse: bool = False) -> list[Bipartition]:
    """All ``2**(n-1) - 1`` cuts whose row side contains qubit 1.

    Ordered by increasing size, then lexicographically.  Every unordered
    cut ``{S, S^c}`` appears exactly once.
    """
    cuts = []
    for size in range(1, n):
        for rest in combinations(range(2, n + 1), size - 1):
            cuts.append(Bipartition(n, (1,) + rest))
    if reverse:
        cuts.reverse()
    return cuts


def k_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All ``k``-element label subsets of ``1..n`` in lexicographic order."""
    return combinations(range(1, n + 1), k)

