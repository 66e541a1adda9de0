# src/semantics/tableau.py

"""
Decision procedure for propositional S4: a signed tableau with ancestor blocking.

A node is a set of signed formulas (True means "holds here"). Saturation applies
the propositional rules and T(box A) => T A; every F(box A) demands a successor
seeded with the node's T(box _) formulas and F A. A successor is blocked by an
ancestor on the same path that has exactly the same T(box _) part and already
contains the seed. Open nodes become worlds of the countermodel, whose relation is
the reflexive-transitive closure of the tree and blocking edges.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from logic.formula import And, Atom, Box, FalseC, Formula, Imp, Or, atoms_of
from semantics.kripke import KripkeModel, model_check, require_modal
from semantics.minimise import minimise_countermodel

logger = logging.getLogger(__name__)

Signed = tuple[bool, Formula]


@dataclass(frozen=True)
class Valid:
    @property
    def valid(self) -> bool:
        return True


@dataclass(frozen=True)
class Countermodel:
    model: KripkeModel
    world: int

    @property
    def valid(self) -> bool:
        return False


def _alpha_beta(sf: Signed) -> tuple[list[Signed], list[Signed]] | list[Signed] | None:
    """Expansion of one signed formula: a list (alpha), a pair of lists (beta) or None."""
    sign, f = sf
    if isinstance(f, And):
        return [(True, f.left), (True, f.right)] if sign else ([(False, f.left)], [(False, f.right)])
    if isinstance(f, Or):
        return ([(True, f.left)], [(True, f.right)]) if sign else [(False, f.left), (False, f.right)]
    if isinstance(f, Imp):
        return ([(False, f.left)], [(True, f.right)]) if sign else [(True, f.left), (False, f.right)]
    if isinstance(f, Box) and sign:
        return [(True, f.body)]
    return None


def _saturations(todo: list[Signed], done: frozenset, betas: tuple = ()) -> Iterator[frozenset]:
    """Every open saturation of done plus todo; alpha rules first, then one branching."""
    todo = list(todo)
    betas = list(betas)
    while todo or betas:
        if todo:
            sf = todo.pop()
            if sf in done:
                continue
            sign, f = sf
            if (not sign, f) in done or (sign and isinstance(f, FalseC)):
                return
            done = done | {sf}
            expansion = _alpha_beta(sf)
            if isinstance(expansion, list):
                todo.extend(expansion)
            elif isinstance(expansion, tuple):
                betas.append(expansion)
            continue
        left, right = betas.pop()
        if any(sf in done for sf in left) or any(sf in done for sf in right):
            continue
        for branch in (left, right):
            yield from _saturations(branch, done, tuple(betas))
        return
    yield done


def _boxes(node: frozenset) -> frozenset:
    return frozenset(sf for sf in node if sf[0] and isinstance(sf[1], Box))


class _Search:

    def __init__(self):
        self.worlds: list[frozenset] = []
        self.edges: list[tuple[int, int]] = []
        self.failed: set[frozenset] = set()
        self.expanded = 0

    def satisfy(self, seed: frozenset, path: list[tuple[int, frozenset]]) -> int | None:
        """Index of a world satisfying seed, or None when seed is unsatisfiable."""
        if seed in self.failed:
            return None
        for node in _saturations(list(seed), frozenset()):
            mark = (len(self.worlds), len(self.edges))
            index = len(self.worlds)
            self.worlds.append(node)
            self.expanded += 1
            if self._demands(index, node, path + [(index, node)]):
                return index
            del self.worlds[mark[0]:]
            del self.edges[mark[1]:]
        self.failed.add(seed)
        return None

    def _demands(self, index: int, node: frozenset, path: list[tuple[int, frozenset]]) -> bool:
        boxes = _boxes(node)
        demands = sorted((f for sign, f in node if not sign and isinstance(f, Box)), key=repr)
        for demand in demands:
            seed = boxes | {(False, demand.body)}
            blocker = next((i for i, ancestor in reversed(path)
                            if _boxes(ancestor) == boxes and seed <= ancestor), None)
            if blocker is not None:
                self.edges.append((index, blocker))
                continue
            child = self.satisfy(frozenset(seed), path)
            if child is None:
                return False
            self.edges.append((index, child))
        return True


def decide_s4(f: Formula, minimise: bool = True, max_worlds: int = 3) -> Valid | Countermodel:
    """
    Valid, or a countermodel verified by model_check.

    Raises:
        NonPropositionalInput, SortClash
    """
    require_modal(f)
    search = _Search()
    root = search.satisfy(frozenset({(False, f)}), [])
    logger.debug("tableau expanded %d node(s) for %s", search.expanded, f)
    if root is None:
        return Valid()

    reachable = {root}
    frontier = [root]
    while frontier:
        u = frontier.pop()
        for a, b in search.edges:
            if a == u and b not in reachable:
                reachable.add(b)
                frontier.append(b)
    order = sorted(reachable)
    label = {old: new for new, old in enumerate(order)}
    names = sorted({a.name for a in atoms_of(f)})
    valuation = {name: frozenset(label[i] for i in order if (True, Atom(name)) in search.worlds[i])
                 for name in names}
    model = KripkeModel.closure(range(len(order)), [(label[a], label[b]) for a, b in search.edges
                                                     if a in label and b in label], valuation)
    world = label[root]
    if world in model_check(model, f):
        raise RuntimeError(f"tableau countermodel does not refute {f}")
    if minimise:
        model, world = minimise_countermodel(model, world, f, max_worlds)
    return Countermodel(model, world)


def valid_s4(f: Formula) -> bool:
    return isinstance(decide_s4(f, minimise=False), Valid)
