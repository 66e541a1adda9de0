# src/calculi/calculi.py

"""
Axiom and rule tables of QC, QH, QS4, QH4 and QHC, and their extensions.

Modus ponens and generalization are built into the kernel and are not listed.
Each axiom name maps to one schema per sort the calculus reasons about, so in
QHC the name `K` covers both A -> (B -> A) on problems and on propositions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping

from logic.errors import SortClash, UnknownCalculus
from logic.formula import Atom, Box, Formula, Nabla, Oc, Sort, Wn, subformulas
from logic.parser import parse_formula, parse_signature
from logic.schema import Metavariable, Schema

logger = logging.getLogger(__name__)

BUILTIN_NAMES = ("QC", "QH", "QS4", "QH4", "QHC")


class Discipline(str, Enum):
    SINGLE_SORTED = "single-sorted"
    TWO_SORTED = "two-sorted"
    SINGLE_SORTED_BOX = "single-sorted + box"
    SINGLE_SORTED_NABLA = "single-sorted + nabla"


@dataclass(frozen=True)
class RuleSchema:
    """
    An inference rule; premises and conclusion share one metavariable table.

    Args:
        name (str): rule name used in justifications.
        premises (tuple): premise schemata.
        conclusion (Schema): conclusion schema.
    """
    name: str
    premises: tuple[Schema, ...]
    conclusion: Schema

    @property
    def metavariables(self) -> tuple[Metavariable, ...]:
        return self.conclusion.metavariables

    @property
    def sort(self) -> Sort:
        return self.conclusion.sort


def make_schema(name: str, text: str, declarations: str) -> Schema:
    """
    Parses `text` as a schema whose metavariables are declared by `declarations`,
    e.g. make_schema("wn_oc", "?!P -> P", "prop P.").
    """
    sig = parse_signature(declarations)
    body = parse_formula(text, sig)
    used = {a.name for a in subformulas(body) if isinstance(a, Atom)}
    metas = tuple(Metavariable(d.name, d.sort, d.arity) for d in sig if d.name in used)
    return Schema(body, metas, name)


def make_rule(name: str, premises: Iterable[str], conclusion: str, declarations: str) -> RuleSchema:
    """Every schema of the rule shares the metavariables that occur anywhere in it."""
    sig = parse_signature(declarations)
    bodies = [parse_formula(p, sig) for p in premises]
    goal = parse_formula(conclusion, sig)
    used = {a.name for f in (*bodies, goal) for a in subformulas(f) if isinstance(a, Atom)}
    metas = tuple(Metavariable(d.name, d.sort, d.arity) for d in sig if d.name in used)
    return RuleSchema(name, tuple(Schema(b, metas, name) for b in bodies), Schema(goal, metas, name))


# connectives admitted beyond &, |, ->, forall, exists
_MODALITIES = {
    Discipline.SINGLE_SORTED: frozenset(),
    Discipline.TWO_SORTED: frozenset({Wn, Oc}),
    Discipline.SINGLE_SORTED_BOX: frozenset({Box}),
    Discipline.SINGLE_SORTED_NABLA: frozenset({Nabla}),
}


@dataclass(frozen=True)
class Calculus:
    """
    A named table of axiom schemata and rule schemata.

    Args:
        name (str): the calculus name (QHC, QHC+KSP, ...).
        discipline (Discipline): sort discipline of the language.
        sorts (frozenset): the sorts the calculus reasons about.
        axioms (Mapping): axiom name -> one schema per admitted sort.
        rules (Mapping): rule name -> one rule schema per admitted sort.
        ancestors (frozenset): names of every calculus this one includes, itself included.
    """
    name: str
    discipline: Discipline
    sorts: frozenset
    axioms: Mapping[str, tuple[Schema, ...]]
    rules: Mapping[str, tuple[RuleSchema, ...]]
    ancestors: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "axioms", MappingProxyType(dict(self.axioms)))
        object.__setattr__(self, "rules", MappingProxyType(dict(self.rules)))
        object.__setattr__(self, "ancestors", frozenset(self.ancestors) | {self.name})

    def axiom_names(self) -> set[str]:
        return set(self.axioms)

    def rule_names(self) -> set[str]:
        return set(self.rules)

    def includes(self, other: "Calculus | str") -> bool:
        """True when every theorem of `other` is a theorem of this calculus."""
        name = other if isinstance(other, str) else other.name
        return name in self.ancestors

    def admits(self, f: Formula) -> bool:
        """Whether f belongs to the language of this calculus."""
        allowed = _MODALITIES[self.discipline]
        for g in subformulas(f):
            if g.sort not in self.sorts:
                return False
            if isinstance(g, (Wn, Oc, Box, Nabla)) and type(g) not in allowed:
                return False
        return True

    def axiom_variants(self, name: str) -> tuple[Schema, ...]:
        try:
            return self.axioms[name]
        except KeyError:
            raise KeyError(f"Calculus '{self.name}' has no axiom '{name}'.") from None

    def rule_variants(self, name: str) -> tuple[RuleSchema, ...]:
        try:
            return self.rules[name]
        except KeyError:
            raise KeyError(f"Calculus '{self.name}' has no rule '{name}'.") from None

    def describe(self) -> str:
        from logic.printer import format_formula
        lines = [f"{self.name} ({self.discipline.value})"]
        for name in sorted(self.axioms):
            for schema in self.axioms[name]:
                lines.append(f"  axiom {name:<8} {format_formula(schema.body)}")
        for name in sorted(self.rules):
            for rule in self.rules[name]:
                premises = "; ".join(format_formula(p.body) for p in rule.premises)
                lines.append(f"  rule  {name:<8} {premises} / {format_formula(rule.conclusion.body)}")
        return "\n".join(lines)


# -----------------------------
# Builtin tables
# -----------------------------

_BASE = {
    "K": "A -> (B -> A)",
    "S": "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
    "and_l": "A & B -> A",
    "and_r": "A & B -> B",
    "and_i": "A -> (B -> A & B)",
    "or_l": "A -> A | B",
    "or_r": "B -> A | B",
    "or_e": "(A -> C) -> ((B -> C) -> (A | B -> C))",
    "efq": "{falsum} -> A",
}

_QUANTIFIER = {
    "all_e": ("forall x. A(x) -> A(t)", "A(1)"),
    "ex_i": ("A(t) -> exists x. A(x)", "A(1)"),
    "all_i": ("forall x. (C -> A(x)) -> (C -> forall x. A(x))", "A(1), C"),
    "ex_e": ("forall x. (A(x) -> C) -> (exists x. A(x) -> C)", "A(1), C"),
}


def hilbert_base(sort: Sort) -> dict[str, Schema]:
    """The shared Hilbert base on one sort; classical adds double-negation elimination."""
    keyword = sort.keyword
    falsum_text = "bot" if sort is Sort.PROBLEM else "0"
    table = {}
    for name, text in _BASE.items():
        table[name] = make_schema(name, text.format(falsum=falsum_text), f"{keyword} A, B, C.")
    for name, (text, decls) in _QUANTIFIER.items():
        table[name] = make_schema(name, text, f"{keyword} {decls}.")
    if sort is Sort.PROPOSITION:
        table["dne"] = make_schema("dne", "~~A -> A", "prop A.")
    return table


def _merge(*tables: Mapping[str, Schema]) -> dict[str, tuple[Schema, ...]]:
    merged: dict[str, tuple[Schema, ...]] = {}
    for table in tables:
        for name, schema in table.items():
            merged[name] = merged.get(name, ()) + (schema,)
    return merged


def _single(table: Mapping[str, Schema | RuleSchema]) -> dict[str, tuple]:
    return {name: (item,) for name, item in table.items()}


def _build_builtin(name: str) -> Calculus:
    intuitionistic = hilbert_base(Sort.PROBLEM)
    classical = hilbert_base(Sort.PROPOSITION)

    if name == "QH":
        return Calculus("QH", Discipline.SINGLE_SORTED, frozenset({Sort.PROBLEM}),
                        _merge(intuitionistic), {})
    if name == "QC":
        return Calculus("QC", Discipline.SINGLE_SORTED, frozenset({Sort.PROPOSITION}),
                        _merge(classical), {})
    if name == "QS4":
        decls = "prop P, Q."
        extra = {
            "box_1": make_schema("box_1", "box P -> P", decls),
            "box_2": make_schema("box_2", "box P -> box box P", decls),
            "box_4": make_schema("box_4", "box (P -> Q) -> (box P -> box Q)", decls),
        }
        rules = {"box_3": make_rule("box_3", ["P"], "box P", "prop P.")}
        return Calculus("QS4", Discipline.SINGLE_SORTED_BOX, frozenset({Sort.PROPOSITION}),
                        _merge(classical, extra), _single(rules), frozenset({"QC"}))
    if name == "QH4":
        decls = "prob A, B."
        extra = {
            "nabla_1": make_schema("nabla_1", "A -> nabla A", decls),
            "nabla_2": make_schema("nabla_2", "nabla nabla A -> nabla A", decls),
            "nabla_3": make_schema("nabla_3", "nabla bot -> bot", decls),
            "nabla_4": make_schema("nabla_4", "nabla (A -> B) -> (nabla A -> nabla B)", decls),
        }
        return Calculus("QH4", Discipline.SINGLE_SORTED_NABLA, frozenset({Sort.PROBLEM}),
                        _merge(intuitionistic, extra), {}, frozenset({"QH"}))
    if name == "QHC":
        decls = "prob A, B. prop P, Q."
        extra = {
            "wn_oc": make_schema("wn_oc", "?!P -> P", decls),
            "oc_wn": make_schema("oc_wn", "A -> !?A", decls),
            "oc_imp": make_schema("oc_imp", "!(P -> Q) -> (!P -> !Q)", decls),
            "wn_imp": make_schema("wn_imp", "?(A -> B) -> (?A -> ?B)", decls),
            "oc_bot": make_schema("oc_bot", "~!0", decls),
        }
        rules = {
            "oc_top": make_rule("oc_top", ["P"], "!P", "prop P."),
            "wn_top": make_rule("wn_top", ["A"], "?A", "prob A."),
        }
        return Calculus("QHC", Discipline.TWO_SORTED, frozenset(Sort),
                        _merge(intuitionistic, classical, extra), _single(rules),
                        frozenset({"QH", "QC"}))
    raise UnknownCalculus(f"Unknown calculus '{name}'; builtin calculi are {', '.join(BUILTIN_NAMES)}.")


def extend(base: Calculus, extra_axioms: Iterable[Schema] = (), extra_rules: Iterable[RuleSchema] = (),
           name: str | None = None) -> Calculus:
    """
    A new calculus: base plus extra axioms and rules. The base is left unchanged.

    Raises:
        SortClash: an extra schema is not in base's language.
        ValueError: an extra name collides with one already in the table.
    """
    extra_axioms, extra_rules = tuple(extra_axioms), tuple(extra_rules)
    name = name or f"{base.name}+" + "+".join(s.name for s in (*extra_axioms, *extra_rules))
    axioms = dict(base.axioms)
    for schema in extra_axioms:
        if not base.admits(schema.body):
            raise SortClash(f"Axiom '{schema.name}' is not in the language of {base.name}.")
        if schema.name in axioms:
            raise ValueError(f"Axiom name '{schema.name}' is already used in {base.name}.")
        axioms[schema.name] = (schema,)
    rules = dict(base.rules)
    for rule in extra_rules:
        for part in (*rule.premises, rule.conclusion):
            if not base.admits(part.body):
                raise SortClash(f"Rule '{rule.name}' is not in the language of {base.name}.")
        if rule.name in rules:
            raise ValueError(f"Rule name '{rule.name}' is already used in {base.name}.")
        rules[rule.name] = (rule,)
    return Calculus(name, base.discipline, base.sorts, axioms, rules, base.ancestors)


def define_theory(spec: Mapping) -> Calculus:
    """
    A calculus extension from its dictionary form (the JSON theory file layout):

        {"name": "QHC+KSP", "base": "QHC", "declarations": "prop P.",
         "axioms": {"KSP": "~!~P -> !P"},
         "rules": {"EDR": {"premises": ["~(A & B)"], "conclusion": "..."}}}

    The base must already be known to the registry. The result is not registered.
    """
    missing = {"name", "base", "declarations"} - set(spec)
    if missing:
        raise KeyError(f"Theory is missing {', '.join(sorted(missing))}.")
    declarations = spec["declarations"]
    axioms = [make_schema(name, text, declarations) for name, text in spec.get("axioms", {}).items()]
    rules = [make_rule(name, rule["premises"], rule["conclusion"], declarations)
             for name, rule in spec.get("rules", {}).items()]
    return extend(CALCULI.get(spec["base"]), axioms, rules, name=spec["name"])


class CalculusRegistry:
    """Builtin calculi plus every registered extension, addressable by name."""

    def __init__(self):
        self._calculi: dict[str, Calculus] = {}

    def get(self, name: str) -> Calculus:
        known = self._calculi.get(name)
        if known is None and name in BUILTIN_NAMES:
            known = self._calculi[name] = _build_builtin(name)
        if known is None:
            raise UnknownCalculus(f"Unknown calculus '{name}'. Known calculi: {', '.join(self.names())}.")
        return known

    def register(self, calculus: Calculus) -> Calculus:
        existing = self._calculi.get(calculus.name)
        if existing is not None and existing is not calculus:
            if existing.axioms == calculus.axioms and existing.rules == calculus.rules:
                return existing
            raise ValueError(f"A different calculus named '{calculus.name}' is already registered.")
        self._calculi[calculus.name] = calculus
        logger.debug("registered calculus %s", calculus.name)
        return calculus

    def names(self) -> list[str]:
        return sorted(set(BUILTIN_NAMES) | set(self._calculi))

    def __contains__(self, name: str) -> bool:
        return name in self._calculi or name in BUILTIN_NAMES


CALCULI = CalculusRegistry()


def builtin(name: str) -> Calculus:
    if name not in BUILTIN_NAMES:
        raise UnknownCalculus(f"Unknown calculus '{name}'; builtin calculi are {', '.join(BUILTIN_NAMES)}.")
    return CALCULI.get(name)


def register(calculus: Calculus) -> Calculus:
    return CALCULI.register(calculus)


def get_calculus(name: str) -> Calculus:
    return CALCULI.get(name)


def register_theory(spec: Mapping) -> Calculus:
    return CALCULI.register(define_theory(spec))
