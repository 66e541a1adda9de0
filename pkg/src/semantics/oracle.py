# src/semantics/oracle.py

"""
Brute-force S4 oracle: every preorder on up to n worlds, every valuation.

Kept independent of the tableau (its own numpy evaluator) so the two can be
checked against each other.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from logic.formula import And, Atom, Box, FalseC, Formula, Imp, Or, atoms_of
from semantics.kripke import KripkeModel, require_modal


@lru_cache(maxsize=None)
def preorders(n: int) -> tuple[np.ndarray, ...]:
    """All reflexive transitive relations on n worlds, as boolean matrices."""
    off_diagonal = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for bits in itertools.product((False, True), repeat=len(off_diagonal)):
        matrix = np.eye(n, dtype=bool)
        for (i, j), bit in zip(off_diagonal, bits):
            matrix[i, j] = bit
        square = (matrix.astype(np.int64) @ matrix.astype(np.int64)) > 0
        if not np.any(square & ~matrix):
            matrix.setflags(write=False)
            found.append(matrix)
    return tuple(found)


def truth(f: Formula, relation: np.ndarray, valuation: dict[str, np.ndarray]) -> np.ndarray:
    """Boolean vector: f's truth value at each world."""
    n = relation.shape[0]
    if isinstance(f, Atom):
        return valuation[f.name]
    if isinstance(f, FalseC):
        return np.zeros(n, dtype=bool)
    if isinstance(f, And):
        return truth(f.left, relation, valuation) & truth(f.right, relation, valuation)
    if isinstance(f, Or):
        return truth(f.left, relation, valuation) | truth(f.right, relation, valuation)
    if isinstance(f, Imp):
        return ~truth(f.left, relation, valuation) | truth(f.right, relation, valuation)
    if isinstance(f, Box):
        body = truth(f.body, relation, valuation)
        return np.all(~relation | body[np.newaxis, :], axis=1)
    raise TypeError(f"Not a propositional QS4 formula: {f!r}")


def _valuations(names: list[str], n: int) -> Iterator[dict[str, np.ndarray]]:
    for bits in itertools.product((False, True), repeat=len(names) * n):
        grid = np.array(bits, dtype=bool).reshape(len(names), n) if names else np.zeros((0, n), dtype=bool)
        yield {name: grid[k] for k, name in enumerate(names)}


def to_model(relation: np.ndarray, valuation: dict[str, np.ndarray]) -> KripkeModel:
    n = relation.shape[0]
    edges = frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(relation)))
    return KripkeModel(tuple(range(n)), edges,
                       {name: frozenset(int(w) for w in np.nonzero(vec)[0]) for name, vec in valuation.items()})


def find_countermodel(f: Formula, max_worlds: int = 3, min_worlds: int = 1) -> tuple[KripkeModel, int] | None:
    """The smallest model (and world) falsifying f, searching min_worlds..max_worlds."""
    require_modal(f)
    names = sorted({a.name for a in atoms_of(f)})
    for n in range(min_worlds, max_worlds + 1):
        for relation in preorders(n):
            for valuation in _valuations(names, n):
                values = truth(f, relation, valuation)
                if not values.all():
                    return to_model(relation, valuation), int(np.argmin(values))
    return None


def valid_up_to(f: Formula, max_worlds: int = 3) -> bool:
    """No S4 model with at most max_worlds worlds falsifies f."""
    return find_countermodel(f, max_worlds) is None
