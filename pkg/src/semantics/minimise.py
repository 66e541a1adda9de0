# src/semantics/minimise.py

"""Shrinks countermodels: generated submodel, transitive filtration, bounded search."""

from __future__ import annotations

import logging

from logic.formula import Box, Formula, atoms_of, subformulas
from semantics.kripke import KripkeModel, model_check
from semantics.oracle import find_countermodel

logger = logging.getLogger(__name__)

# bounded search is only tried for formulas with at most this many atoms
_SEARCH_ATOMS = 3


def generated_submodel(model: KripkeModel, world: int) -> tuple[KripkeModel, int]:
    """The worlds reachable from world, relabelled from 0 with world first."""
    reach = sorted(model.successors(world) - {world})
    order = [world] + reach
    label = {old: new for new, old in enumerate(order)}
    relation = frozenset((label[u], label[v]) for u, v in model.relation if u in label and v in label)
    valuation = {a: frozenset(label[w] for w in ws if w in label) for a, ws in model.valuation.items()}
    return KripkeModel(tuple(range(len(order))), relation, valuation), 0


def filtrate(model: KripkeModel, world: int, f: Formula) -> tuple[KripkeModel, int]:
    """
    Quotient by agreement on the subformulas of f; [u] R [v] iff every boxed
    subformula true at u is true at v.
    """
    subs = sorted(subformulas(f), key=repr)
    truth = {g: model_check(model, g) for g in subs}
    boxed = [g for g in subs if isinstance(g, Box)]
    classes: dict[tuple, int] = {}
    of_world: dict[int, int] = {}
    for w in model.worlds:
        key = tuple(w in truth[g] for g in subs)
        of_world[w] = classes.setdefault(key, len(classes))
    keys = {index: key for key, index in classes.items()}
    position = {g: k for k, g in enumerate(subs)}

    def holds(cls: int, g: Formula) -> bool:
        return keys[cls][position[g]]

    relation = frozenset((u, v) for u in keys for v in keys
                         if all(holds(v, g) for g in boxed if holds(u, g)))
    valuation = {a.name: frozenset(c for c in keys if holds(c, a)) for a in atoms_of(f)}
    return KripkeModel(tuple(range(len(keys))), relation, valuation), of_world[world]


def _refutes(model: KripkeModel, world: int, f: Formula) -> bool:
    return world not in model_check(model, f)


def minimise_countermodel(model: KripkeModel, world: int, f: Formula,
                          max_worlds: int = 3) -> tuple[KripkeModel, int]:
    """A countermodel no larger than the given one; every candidate is re-verified."""
    best = (model, world)
    for step in (generated_submodel, lambda m, w: filtrate(m, w, f)):
        candidate = step(*best)
        if len(candidate[0]) < len(best[0]) and _refutes(*candidate, f):
            best = candidate
    if len(best[0]) > 1 and len(atoms_of(f)) <= _SEARCH_ATOMS:
        found = find_countermodel(f, max_worlds=min(max_worlds, len(best[0]) - 1))
        if found is not None and _refutes(*found, f):
            best = found
    logger.debug("countermodel shrunk from %d to %d world(s)", len(model), len(best[0]))
    return best
