# src/semantics/kripke.py

"""Finite S4 Kripke models and the model checker for the propositional QS4 language."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from logic.errors import NonPropositionalInput, SortClash, UnknownAtom
from logic.formula import (
    QUANTIFIERS, And, Atom, Box, FalseC, Formula, Imp, Or, Sort, subformulas,
)


@dataclass(frozen=True)
class KripkeModel:
    """
    Args:
        worlds (tuple): world labels 0..n-1.
        relation (frozenset): pairs (u, v) with u R v; reflexive and transitive.
        valuation (Mapping): atom name -> frozenset of worlds where it holds.
    """
    worlds: tuple[int, ...]
    relation: frozenset
    valuation: Mapping[str, frozenset] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        known = set(self.worlds)
        for u, v in self.relation:
            if u not in known or v not in known:
                raise ValueError(f"Edge ({u}, {v}) leaves the model's worlds.")
        for w in self.worlds:
            if (w, w) not in self.relation:
                raise ValueError(f"Relation is not reflexive at world {w}.")
        for u, v in self.relation:
            for x in self.successors(v):
                if (u, x) not in self.relation:
                    raise ValueError(f"Relation is not transitive: {u}R{v} and {v}R{x} but not {u}R{x}.")
        for atom, where in self.valuation.items():
            if not set(where) <= known:
                raise ValueError(f"Valuation of '{atom}' names unknown worlds.")
        object.__setattr__(self, "valuation", {k: frozenset(v) for k, v in sorted(self.valuation.items())})

    @classmethod
    def closure(cls, worlds, edges, valuation) -> "KripkeModel":
        """The model over the reflexive-transitive closure of edges."""
        worlds = tuple(worlds)
        reach = {w: {w} for w in worlds}
        for u, v in edges:
            reach[u].add(v)
        changed = True
        while changed:
            changed = False
            for u in worlds:
                extra = set().union(*(reach[v] for v in reach[u])) - reach[u]
                if extra:
                    reach[u] |= extra
                    changed = True
        relation = frozenset((u, v) for u in worlds for v in reach[u])
        return cls(worlds, relation, valuation)

    def successors(self, w: int) -> frozenset:
        return frozenset(v for u, v in self.relation if u == w)

    def __len__(self) -> int:
        return len(self.worlds)

    def to_json(self) -> dict:
        return {
            "worlds": list(self.worlds),
            "relation": sorted([u, v] for u, v in self.relation),
            "valuation": {atom: sorted(ws) for atom, ws in self.valuation.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "KripkeModel":
        return cls(tuple(data["worlds"]), frozenset(tuple(e) for e in data["relation"]),
                   {k: frozenset(v) for k, v in data["valuation"].items()})


def require_modal(f: Formula):
    """
    Raises:
        NonPropositionalInput: f has a quantifier or an atom with arguments.
        SortClash: f uses a connective outside the propositional QS4 language.
    """
    for g in subformulas(f):
        if isinstance(g, QUANTIFIERS) or (isinstance(g, Atom) and g.args):
            raise NonPropositionalInput(f"{f} is not propositional; only quantifier-free formulas "
                                        f"over 0-ary atoms can be decided.")
        if not isinstance(g, (Atom, FalseC, And, Or, Imp, Box)) or g.sort is not Sort.PROPOSITION:
            raise SortClash(f"{g} is outside the propositional QS4 language.")


def model_check(model: KripkeModel, f: Formula) -> frozenset:
    """
    The worlds of model where f holds.

    Raises:
        UnknownAtom, NonPropositionalInput, SortClash
    """
    require_modal(f)
    everywhere = frozenset(model.worlds)
    successors = {w: model.successors(w) for w in model.worlds}
    memo: dict[Formula, frozenset] = {}

    def ev(g: Formula) -> frozenset:
        if g in memo:
            return memo[g]
        if isinstance(g, Atom):
            if g.name not in model.valuation:
                raise UnknownAtom(f"Atom '{g.name}' has no valuation in the model.")
            result = model.valuation[g.name]
        elif isinstance(g, FalseC):
            result = frozenset()
        elif isinstance(g, And):
            result = ev(g.left) & ev(g.right)
        elif isinstance(g, Or):
            result = ev(g.left) | ev(g.right)
        elif isinstance(g, Imp):
            result = (everywhere - ev(g.left)) | ev(g.right)
        else:
            body = ev(g.body)
            result = frozenset(w for w in model.worlds if successors[w] <= body)
        memo[g] = result
        return result

    return ev(f)
