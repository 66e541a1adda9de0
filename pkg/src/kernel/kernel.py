# src/kernel/kernel.py

"""
The trusted proof checker.

A proof is a list of numbered lines, each a formula with one justification. Line
numbers are 1-based; every reference must point strictly backwards. check() is
the only place in the toolchain that declares a formula derived.
"""

from __future__ import annotations

import logging
import weakref
from dataclasses import dataclass, field
from typing import Mapping, Protocol, Sequence, Union

from calculi.calculi import Calculus, builtin, get_calculus
from logic.errors import QHCError, UnboundMetavariable, UnknownLemma
from logic.formula import Atom, Forall, Formula, Imp, Signature, free_vars, typecheck
from logic.printer import format_formula
from logic.schema import Binding, Instance, Schema, instantiate

logger = logging.getLogger(__name__)


# -----------------------------
# Justifications
# -----------------------------

@dataclass(frozen=True)
class Axiom:
    name: str
    binding: Binding = field(default_factory=dict, hash=False)
    terms: Mapping[str, str] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class Hypothesis:
    index: int


@dataclass(frozen=True)
class ModusPonens:
    """Cites a line X and a line X -> Y, in either order."""
    first: int
    second: int


@dataclass(frozen=True)
class Generalization:
    line: int
    var: str


@dataclass(frozen=True)
class Rule:
    name: str
    premises: tuple[int, ...]
    binding: Binding = field(default_factory=dict, hash=False)
    terms: Mapping[str, str] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class Lemma:
    """
    Cites a corpus entry. Atoms of the entry's statement are schematic; those left
    out of `binding` stand for themselves. `premises` discharge the entry's
    hypotheses, in order.
    """
    id: str
    binding: Binding = field(default_factory=dict, hash=False)
    terms: Mapping[str, str] = field(default_factory=dict, hash=False)
    premises: tuple[int, ...] = ()


Justification = Union[Axiom, Hypothesis, ModusPonens, Generalization, Rule, Lemma]


@dataclass(frozen=True)
class Line:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    """
    Args:
        calculus (str): name of the calculus the proof is checked in.
        signature (Signature): the atoms every line must typecheck against.
        hypotheses (tuple): the formulas cited by Hypothesis(i), 1-based.
        lines (tuple): the numbered Line entries.
        goal (Formula): must equal the last line.
    """
    calculus: str
    signature: Signature
    hypotheses: tuple[Formula, ...]
    lines: tuple[Line, ...]
    goal: Formula

    def __len__(self) -> int:
        return len(self.lines)


# -----------------------------
# Verdicts
# -----------------------------

@dataclass(frozen=True)
class Accepted:
    footprint: frozenset = frozenset()

    @property
    def ok(self) -> bool:
        return True

    def __bool__(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {"status": "accepted"}


@dataclass(frozen=True)
class Rejected:
    line: int
    reason: str

    @property
    def ok(self) -> bool:
        return False

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"status": "rejected", "failing_line": self.line, "reason": self.reason}


Verdict = Union[Accepted, Rejected]


class LemmaEntry(Protocol):
    id: str
    calculus: str
    hypotheses: tuple[Formula, ...]
    goal: Formula
    proof: Proof


class LemmaSource(Protocol):
    def lemma(self, id: str) -> LemmaEntry: ...


class _LineError(Exception):
    """Internal: the current line is not justified."""


# -----------------------------
# Lemma statements
# -----------------------------

def lemma_schemata(entry: LemmaEntry) -> tuple[tuple[Schema, ...], Schema]:
    """The entry's hypotheses and goal, with every atom schematic."""
    frozen = Schema.frozen(entry.goal, entry.id, tuple(entry.hypotheses))
    metas = frozen.metavariables
    return tuple(Schema(h, metas, entry.id) for h in entry.hypotheses), frozen


def identity_binding(schema: Schema, binding: Binding) -> dict[str, Instance | Formula]:
    """binding completed so that every unbound atom stands for itself."""
    full: dict[str, Instance | Formula] = dict(binding)
    for meta in schema.metavariables:
        if meta.name not in full:
            params = tuple(f"_{i}" for i in range(meta.arity))
            full[meta.name] = Instance(Atom(meta.name, params, meta.sort), params)
    return full


def instantiate_lemma(entry: LemmaEntry, binding: Binding,
                      terms: Mapping[str, str]) -> tuple[tuple[Formula, ...], Formula]:
    hyps, goal = lemma_schemata(entry)
    full = identity_binding(goal, binding)
    strangers = set(binding) - {m.name for m in goal.metavariables}
    if strangers:
        raise UnboundMetavariable(f"Lemma '{entry.id}' has no atom {', '.join(sorted(strangers))} to bind")
    unknown = set(terms) - goal.variables() - set().union(*(h.variables() for h in hyps))
    if unknown:
        raise UnboundMetavariable(f"Lemma '{entry.id}' has no variable {', '.join(sorted(unknown))} to rename")
    premises = tuple(instantiate(h, full, terms, strict=False) for h in hyps)
    return premises, instantiate(goal, full, terms, strict=False)


# -----------------------------
# Checking
# -----------------------------

class _Checker:

    def __init__(self, proof: Proof, calculus: Calculus, registry: LemmaSource | None,
                 allowed: set[str] | None, citing: tuple[str, ...] = ()):
        self.proof = proof
        self.calculus = calculus
        self.registry = registry
        self.allowed = allowed
        self.citing = citing
        self.footprint: set[str] = set()
        self.hypothesis_vars = frozenset().union(*(free_vars(h) for h in proof.hypotheses))

    def line(self, number: int) -> Formula:
        return self.proof.lines[number - 1].formula

    def cite(self, current: int, number: int) -> Formula:
        if not isinstance(number, int) or number < 1:
            raise _LineError(f"line reference {number!r} is not a line number")
        if number >= current:
            raise _LineError(f"line {number} is not earlier than line {current}")
        return self.line(number)

    def use(self, kind: str, name: str):
        tag = f"{kind}:{name}"
        if self.allowed is not None and tag not in self.allowed:
            raise _LineError(f"{kind} '{name}' is outside the permitted axiom set")
        self.footprint.add(tag)

    def justify(self, current: int, formula: Formula, just: Justification):
        if isinstance(just, Axiom):
            self._axiom(formula, just)
        elif isinstance(just, Hypothesis):
            if not 1 <= just.index <= len(self.proof.hypotheses):
                raise _LineError(f"there is no hypothesis {just.index}")
            if self.proof.hypotheses[just.index - 1] != formula:
                raise _LineError(f"hypothesis {just.index} is {_show(self.proof.hypotheses[just.index - 1])}")
        elif isinstance(just, ModusPonens):
            self._modus_ponens(current, formula, just)
        elif isinstance(just, Generalization):
            self._generalization(current, formula, just)
        elif isinstance(just, Rule):
            self._rule(current, formula, just)
        elif isinstance(just, Lemma):
            self._lemma(current, formula, just)
        else:
            raise _LineError(f"unknown justification {just!r}")

    def _axiom(self, formula: Formula, just: Axiom):
        if just.name not in self.calculus.axioms:
            raise _LineError(f"'{just.name}' is not an axiom of {self.calculus.name}")
        self.use("axiom", just.name)
        errors = []
        for schema in self.calculus.axioms[just.name]:
            try:
                if instantiate(schema, just.binding, just.terms) == formula:
                    return
                errors.append(f"the instance is {_show(instantiate(schema, just.binding, just.terms))}")
            except QHCError as e:
                errors.append(str(e))
        raise _LineError(f"not an instance of axiom '{just.name}': {errors[-1]}")

    def _modus_ponens(self, current: int, formula: Formula, just: ModusPonens):
        first, second = self.cite(current, just.first), self.cite(current, just.second)
        for minor, major in ((first, second), (second, first)):
            if isinstance(major, Imp) and major.left == minor and major.right == formula:
                return
        raise _LineError(f"lines {just.first} and {just.second} do not give {_show(formula)} by modus ponens")

    def _generalization(self, current: int, formula: Formula, just: Generalization):
        body = self.cite(current, just.line)
        if formula != Forall(just.var, body):
            raise _LineError(f"expected forall {just.var}. ({_show(body)})")
        if just.var in self.hypothesis_vars:
            raise _LineError(f"cannot generalize on '{just.var}', which is free in a hypothesis")

    def _rule(self, current: int, formula: Formula, just: Rule):
        if just.name not in self.calculus.rules:
            raise _LineError(f"'{just.name}' is not a rule of {self.calculus.name}")
        self.use("rule", just.name)
        cited = [self.cite(current, n) for n in just.premises]
        errors = []
        for rule in self.calculus.rules[just.name]:
            if len(rule.premises) != len(cited):
                errors.append(f"rule '{just.name}' takes {len(rule.premises)} premise(s), "
                              f"{len(cited)} given")
                continue
            strangers = set(just.binding) - {m.name for m in rule.metavariables}
            if strangers:
                errors.append(f"rule '{just.name}' has no metavariable {', '.join(sorted(strangers))}")
                continue
            try:
                wanted = [instantiate(p, just.binding, just.terms, strict=False) for p in rule.premises]
                conclusion = instantiate(rule.conclusion, just.binding, just.terms, strict=False)
            except QHCError as e:
                errors.append(str(e))
                continue
            if wanted != cited:
                errors.append("premise lines do not match the rule's premises")
            elif conclusion != formula:
                errors.append(f"the rule concludes {_show(conclusion)}")
            else:
                return
        raise _LineError(f"bad application of rule '{just.name}': {errors[-1]}")

    def _lemma(self, current: int, formula: Formula, just: Lemma):
        if self.registry is None:
            raise _LineError("no lemma registry is available")
        try:
            entry = self.registry.lemma(just.id)
        except (UnknownLemma, KeyError):
            raise _LineError(f"unknown lemma '{just.id}'") from None
        if not self.calculus.includes(entry.calculus):
            raise _LineError(f"lemma '{just.id}' is proved in {entry.calculus}, "
                             f"which {self.calculus.name} does not include")
        if just.id in self.citing:
            raise _LineError(f"lemma '{just.id}' cites itself through {' -> '.join(self.citing)}")
        verdict = entry_verdict(entry, self.registry, self.citing)
        if not verdict.ok:
            raise _LineError(f"lemma '{just.id}' is not proved: line {verdict.line}: {verdict.reason}")
        for tag in lemma_footprint(entry, self.registry):
            kind, name = tag.split(":", 1)
            self.use(kind, name)
        premises, goal = instantiate_lemma(entry, just.binding, just.terms)
        cited = [self.cite(current, n) for n in just.premises]
        if len(cited) != len(premises):
            raise _LineError(f"lemma '{just.id}' takes {len(premises)} premise(s), {len(cited)} given")
        for n, (got, wanted) in zip(just.premises, zip(cited, premises)):
            if got != wanted:
                raise _LineError(f"line {n} should be {_show(wanted)}")
        if goal != formula:
            raise _LineError(f"lemma '{just.id}' gives {_show(goal)}")


def _show(f: Formula) -> str:
    return format_formula(f)


def check(proof: Proof, registry: LemmaSource | None = None, minimal: bool = False,
          _citing: tuple[str, ...] = ()) -> Verdict:
    """
    Checks every line of proof under its named calculus.

    Args:
        proof (Proof): the proof to check.
        registry (LemmaSource): resolves Lemma citations; optional when none are used.
        minimal (bool): reject any axiom or rule, used directly or through lemmas,
                        outside the builtin QHC table.

    Returns:
        Accepted with the axiom footprint, or Rejected(line, reason). Line 0 means
        the proof as a whole (unknown calculus, ill-typed hypothesis or goal).
    """
    try:
        calculus = get_calculus(proof.calculus)
    except QHCError as e:
        return Rejected(0, str(e))

    for label, f in [*(("hypothesis", h) for h in proof.hypotheses), ("goal", proof.goal)]:
        try:
            typecheck(f, proof.signature)
        except QHCError as e:
            return Rejected(0, f"{label} does not typecheck: {e}")
        if not calculus.admits(f):
            return Rejected(0, f"{label} {_show(f)} is outside the language of {calculus.name}")

    allowed = minimal_axiom_set() if minimal else None
    checker = _Checker(proof, calculus, registry, allowed, _citing)
    for number, line in enumerate(proof.lines, start=1):
        try:
            typecheck(line.formula, proof.signature)
            if not calculus.admits(line.formula):
                raise _LineError(f"{_show(line.formula)} is outside the language of {calculus.name}")
            checker.justify(number, line.formula, line.justification)
        except _LineError as e:
            logger.debug("rejected line %d: %s", number, e)
            return Rejected(number, str(e))
        except QHCError as e:
            logger.debug("rejected line %d: %s", number, e)
            return Rejected(number, str(e))

    if not proof.lines:
        return Rejected(0, "the proof has no lines")
    if proof.lines[-1].formula != proof.goal:
        return Rejected(len(proof.lines), f"last line is not the goal {_show(proof.goal)}")
    return Accepted(frozenset(checker.footprint))


_VERDICTS: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _verdicts(registry: LemmaSource) -> dict:
    try:
        return _VERDICTS.setdefault(registry, {})
    except TypeError:
        return {}


def entry_verdict(entry: LemmaEntry, registry: LemmaSource, _citing: tuple[str, ...] = ()) -> Verdict:
    """
    The kernel's verdict on a registry entry: its proof must prove exactly the
    entry's statement. Verdicts are cached per registry.
    """
    verdicts = _verdicts(registry)
    known = verdicts.get(entry.id)
    if known is not None:
        return known
    if tuple(entry.proof.hypotheses) != tuple(entry.hypotheses) or entry.proof.goal != entry.goal:
        verdict = Rejected(0, f"the proof of '{entry.id}' does not prove its statement")
    else:
        verdict = check(entry.proof, registry, _citing=(*_citing, entry.id))
    verdicts[entry.id] = verdict
    return verdict


def check_derived_rule(premises: Sequence[Schema | Formula], conclusion: Schema | Formula,
                       proof: Proof, registry: LemmaSource | None = None) -> Verdict:
    """
    Certifies the rule premises / conclusion. The premise schemata are frozen: their
    metavariables are ordinary atoms of proof's signature, so an accepted proof is
    a derivation for every instance.
    """
    wanted = tuple(p.body if isinstance(p, Schema) else p for p in premises)
    goal = conclusion.body if isinstance(conclusion, Schema) else conclusion
    if tuple(proof.hypotheses) != wanted:
        return Rejected(0, "the proof's hypotheses are not the rule's premises")
    if proof.goal != goal:
        return Rejected(0, "the proof's goal is not the rule's conclusion")
    return check(proof, registry)


def minimal_axiom_set() -> set[str]:
    qhc = builtin("QHC")
    return {f"axiom:{n}" for n in qhc.axioms} | {f"rule:{n}" for n in qhc.rules}


def lemma_footprint(entry: LemmaEntry, registry: LemmaSource, _seen: dict | None = None) -> frozenset:
    """Axioms and rules used by entry's proof, following lemma citations."""
    seen = {} if _seen is None else _seen
    if entry.id in seen:
        return seen[entry.id]
    seen[entry.id] = frozenset()
    tags: set[str] = set()
    for line in entry.proof.lines:
        just = line.justification
        if isinstance(just, Axiom):
            tags.add(f"axiom:{just.name}")
        elif isinstance(just, Rule):
            tags.add(f"rule:{just.name}")
        elif isinstance(just, Lemma):
            tags |= lemma_footprint(registry.lemma(just.id), registry, seen)
    seen[entry.id] = frozenset(tags)
    return seen[entry.id]


def axiom_footprint(proof: Proof, registry: LemmaSource | None = None) -> frozenset:
    tags: set[str] = set()
    for line in proof.lines:
        just = line.justification
        if isinstance(just, Axiom):
            tags.add(f"axiom:{just.name}")
        elif isinstance(just, Rule):
            tags.add(f"rule:{just.name}")
        elif isinstance(just, Lemma) and registry is not None:
            tags |= lemma_footprint(registry.lemma(just.id), registry)
    return frozenset(tags)
