# src/logic/generator.py

"""Seeded random formulas for fuzzing, one generator per target language."""

from __future__ import annotations

import random

from logic.formula import (
    And, Atom, Box, Exists, Forall, Formula, Imp, Nabla, Oc, Or, Signature, Sort, Wn, falsum,
)

# sort-changing connectives each language admits: result sort -> (node, operand sort)
LANGUAGES = {
    "QHC": {Sort.PROPOSITION: [(Wn, Sort.PROBLEM)], Sort.PROBLEM: [(Oc, Sort.PROPOSITION)]},
    "QS4": {Sort.PROPOSITION: [(Box, Sort.PROPOSITION)], Sort.PROBLEM: []},
    "QH4": {Sort.PROPOSITION: [], Sort.PROBLEM: [(Nabla, Sort.PROBLEM)]},
    "QH": {Sort.PROPOSITION: [], Sort.PROBLEM: []},
    "QC": {Sort.PROPOSITION: [], Sort.PROBLEM: []},
}


class FormulaGenerator:
    """
    Draws well-typed formulas over a signature.

    Args:
        sig (Signature): atoms to draw from.
        language (str): one of QHC, QS4, QH4, QH, QC.
        seed (int): seed of the private random.Random.
        quantifiers (bool): allow forall/exists and atoms with term slots.
        variables (tuple): variable names used in atom arguments and binders.
        leaf_bias (float): probability of stopping early at each level.
    """

    def __init__(self, sig: Signature, language: str = "QHC", seed: int | None = None,
                 quantifiers: bool = False, variables: tuple[str, ...] = ("x", "y"),
                 leaf_bias: float = 0.25):
        if language not in LANGUAGES:
            raise ValueError(f"Unknown language '{language}'; expected one of {', '.join(LANGUAGES)}.")
        self.sig = sig
        self.language = language
        self.rng = random.Random(seed)
        self.quantifiers = quantifiers
        self.variables = variables
        self.leaf_bias = leaf_bias

    def formula(self, sort: Sort, depth: int) -> Formula:
        if depth <= 0 or self.rng.random() < self.leaf_bias:
            return self._leaf(sort)
        choices: list[str] = ["and", "or", "imp"]
        if self.quantifiers:
            choices += ["forall", "exists"]
        unary = LANGUAGES[self.language][sort]
        if unary:
            choices += ["unary"] * 2
        kind = self.rng.choice(choices)
        if kind == "unary":
            node, operand = self.rng.choice(unary)
            return node(self.formula(operand, depth - 1))
        if kind in ("forall", "exists"):
            node = Forall if kind == "forall" else Exists
            return node(self.rng.choice(self.variables), self.formula(sort, depth - 1))
        node = {"and": And, "or": Or, "imp": Imp}[kind]
        return node(self.formula(sort, depth - 1), self.formula(sort, depth - 1))

    def _leaf(self, sort: Sort) -> Formula:
        decls = [d for d in self.sig.of_sort(sort) if self.quantifiers or d.arity == 0]
        if not decls or self.rng.random() < 0.1:
            return falsum(sort)
        decl = self.rng.choice(decls)
        args = tuple(self.rng.choice(self.variables) for _ in range(decl.arity))
        return Atom(decl.name, args, sort)

    def sample(self, count: int, depth: int, sort: Sort | None = None) -> list[Formula]:
        sorts = [s for s in Sort if self._admits(s)]
        return [self.formula(sort or self.rng.choice(sorts), depth) for _ in range(count)]

    def _admits(self, sort: Sort) -> bool:
        if self.language in ("QS4", "QC"):
            return sort is Sort.PROPOSITION
        if self.language in ("QH4", "QH"):
            return sort is Sort.PROBLEM
        return True
