# src/kernel/generator.py

"""Random theorems by forward chaining axiom instances, rules and modus ponens."""

from __future__ import annotations

import logging
import random

from calculi.calculi import get_calculus
from kernel.kernel import Axiom, Line, ModusPonens, Proof, Rule
from logic.formula import Formula, Imp, Signature, Sort, is_propositional, size, subformulas
from logic.generator import FormulaGenerator
from logic.schema import instantiate

logger = logging.getLogger(__name__)

_QUANTIFIER_AXIOMS = {"all_e", "ex_i", "all_i", "ex_e"}


class TheoremGenerator:
    """
    Grows one pool of kernel lines; every line is a theorem and the pool prefix
    ending at it is its proof.

    Args:
        sig (Signature): atoms for the axiom instances (0-ary ones are used).
        calculus (str): QHC, QH or QC.
        seed (int): seed of the private random.Random.
        depth (int): depth of freshly drawn metavariable instances.
        max_size (int): pool lines larger than this are not reused as instances.
    """

    def __init__(self, sig: Signature, calculus: str = "QHC", seed: int | None = None, depth: int = 1,
                 max_size: int = 12):
        self.sig = sig
        self.calculus = get_calculus(calculus)
        self.rng = random.Random(seed)
        self.depth = depth
        self.max_size = max_size
        self.formulas = FormulaGenerator(sig, language=calculus, seed=self.rng.randrange(2 ** 32))
        self.axioms = sorted(n for n in self.calculus.axioms if n not in _QUANTIFIER_AXIOMS)
        self.lines: list[Line] = []
        self._index: dict[Formula, int] = {}

    def _pick(self, sort: Sort) -> Formula:
        pool = [line.formula for line in self.lines
                if line.formula.sort is sort and size(line.formula) <= self.max_size]
        roll = self.rng.random()
        if pool and roll < 0.3:
            return self.rng.choice(pool)
        if pool and roll < 0.5:
            parts = [g for g in subformulas(self.rng.choice(pool)) if g.sort is sort]
            if parts:
                return self.rng.choice(sorted(parts, key=repr))
        return self.formulas.formula(sort, self.depth)

    def _add(self, formula: Formula, justification) -> int | None:
        if formula in self._index or not is_propositional(formula) or not self.calculus.admits(formula):
            return None
        self.lines.append(Line(formula, justification))
        self._index[formula] = len(self.lines)
        return len(self.lines)

    def _axiom_step(self):
        name = self.rng.choice(self.axioms)
        variants = [v for v in self.calculus.axioms[name] if v.sort in self.calculus.sorts]
        schema = self.rng.choice(variants)
        binding = {m.name: self._pick(m.sort) for m in schema.metavariables}
        self._add(instantiate(schema, binding), Axiom(name, binding))

    def _mp_step(self) -> bool:
        options = [(n, self._index[f.left]) for n, f in enumerate((l.formula for l in self.lines), start=1)
                   if isinstance(f, Imp) and f.left in self._index and f.right not in self._index]
        if not options:
            return False
        major, minor = self.rng.choice(options)
        self._add(self.lines[major - 1].formula.right, ModusPonens(minor, major))
        return True

    def _rule_step(self) -> bool:
        rules = [(name, r) for name, variants in sorted(self.calculus.rules.items()) for r in variants
                 if len(r.premises) == 1 and len(r.metavariables) == 1]
        if not rules or not self.lines:
            return False
        name, rule = self.rng.choice(rules)
        meta = rule.metavariables[0]
        candidates = [n for n, line in enumerate(self.lines, start=1) if line.formula.sort is meta.sort]
        if not candidates:
            return False
        n = self.rng.choice(candidates)
        binding = {meta.name: self.lines[n - 1].formula}
        if instantiate(rule.premises[0], binding) != self.lines[n - 1].formula:
            return False
        self._add(instantiate(rule.conclusion, binding), Rule(name, (n,), binding))
        return True

    def grow(self, steps: int):
        for _ in range(steps):
            roll = self.rng.random()
            if roll < 0.35 and self._mp_step():
                continue
            if roll < 0.5 and self._rule_step():
                continue
            self._axiom_step()

    def proof_of(self, number: int) -> Proof:
        """The pool prefix ending at line number, as a proof of that line."""
        lines = tuple(self.lines[:number])
        return Proof(self.calculus.name, self.sig, (), lines, lines[-1].formula)

    def theorems(self, count: int, steps_per_round: int = 50) -> list[Proof]:
        """count proofs, preferring lines obtained by modus ponens or a rule."""
        derived: list[int] = []
        rounds = 0
        while len(derived) < count and rounds < 10 * count:
            start = len(self.lines)
            self.grow(steps_per_round)
            derived += [n for n in range(start + 1, len(self.lines) + 1)
                        if not isinstance(self.lines[n - 1].justification, Axiom)]
            rounds += 1
        if len(derived) < count:
            derived += [n for n in range(1, len(self.lines) + 1) if n not in set(derived)]
        logger.debug("generated %d pool lines for %d theorems", len(self.lines), count)
        return [self.proof_of(n) for n in derived[:count]]
