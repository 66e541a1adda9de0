# src/logic/schema.py

"""
Schemata and their instances.

A schema body is an ordinary formula in which some atoms are *schematic*: each
metavariable has a sort and a number of term slots, and every individual variable
of the body (bound or free) is a term metavariable that may be renamed. The side
conditions of the Hilbert schemata ("t is free for x", "x not free in C") are not
written anywhere: instantiate() rejects exactly the bindings that would capture.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Union

from logic.errors import ArityMismatch, CaptureViolation, SortClash, UnboundMetavariable
from logic.formula import (
    QUANTIFIERS, Atom, AtomDecl, Formula, Signature, Sort, children, free_vars,
    rebuild, subformulas, subst_terms,
)


@dataclass(frozen=True, slots=True)
class Instance:
    """
    The formula a metavariable stands for. `params` name the variables of `body`
    that fill the metavariable's term slots, so A(x) := r(x, y) is
    Instance(r(x, y), ("x",)).
    """
    body: Formula
    params: tuple[str, ...] = ()

    @property
    def sort(self) -> Sort:
        return self.body.sort

    def apply(self, args: tuple[str, ...]) -> Formula:
        if len(args) != len(self.params):
            raise ArityMismatch(f"Instance with {len(self.params)} parameter(s) applied "
                                f"to {len(args)} argument(s).")
        return subst_terms(self.body, dict(zip(self.params, args)))


Binding = Mapping[str, Union[Instance, Formula]]


def lam(params: str | tuple[str, ...], body: Formula) -> Instance:
    """lam("x", r(x)) is the instance A(x) := r(x)."""
    if isinstance(params, str):
        params = tuple(p for p in params.replace(",", " ").split() if p)
    return Instance(body, tuple(params))


def as_instance(value: Instance | Formula) -> Instance:
    return value if isinstance(value, Instance) else Instance(value)


@dataclass(frozen=True, slots=True)
class Metavariable:
    name: str
    sort: Sort
    arity: int = 0

    def __str__(self) -> str:
        return self.name if self.arity == 0 else f"{self.name}({self.arity})"


@dataclass(frozen=True, slots=True)
class Schema:
    """
    Args:
        body (Formula): the schema body; atoms named by a metavariable are schematic.
        metavariables (tuple): the schematic atoms with their sort and slot count.
        name (str): axiom, rule or lemma name this schema belongs to.
    """
    body: Formula
    metavariables: tuple[Metavariable, ...]
    name: str = ""

    def __post_init__(self):
        names = [m.name for m in self.metavariables]
        if len(set(names)) != len(names):
            raise ValueError(f"Schema '{self.name}' declares a metavariable twice.")
        table = {m.name: m for m in self.metavariables}
        for atom in (g for g in subformulas(self.body) if isinstance(g, Atom)):
            meta = table.get(atom.name)
            if meta is None:
                continue
            if meta.sort is not atom.sort or meta.arity != atom.arity:
                raise SortClash(f"Schema '{self.name}': occurrence {atom.name}{atom.args} does not "
                                f"agree with metavariable {meta} ({meta.sort.value}).")

    @classmethod
    def frozen(cls, body: Formula, name: str = "", hypotheses: tuple[Formula, ...] = ()) -> "Schema":
        """Every atom of body (and of hypotheses) becomes a metavariable."""
        metas: dict[str, Metavariable] = {}
        for f in (*hypotheses, body):
            for g in sorted(subformulas(f), key=repr):
                if isinstance(g, Atom):
                    metas.setdefault(g.name, Metavariable(g.name, g.sort, g.arity))
        return cls(body, tuple(sorted(metas.values(), key=lambda m: m.name)), name)

    @property
    def sort(self) -> Sort:
        return self.body.sort

    def metavariable(self, name: str) -> Metavariable | None:
        for meta in self.metavariables:
            if meta.name == name:
                return meta
        return None

    def variables(self) -> frozenset[str]:
        """Every individual variable of the body; each one is a term metavariable."""
        names: set[str] = set()
        for g in subformulas(self.body):
            if isinstance(g, Atom):
                names.update(g.args)
            elif isinstance(g, QUANTIFIERS):
                names.add(g.var)
        return frozenset(names)

    def signature(self) -> Signature:
        return Signature(tuple(AtomDecl(m.name, m.sort, m.arity) for m in self.metavariables))


# -----------------------------
# Instantiation
# -----------------------------

def instantiate(schema: Schema, binding: Binding, terms: Mapping[str, str] | None = None,
                strict: bool = True) -> Formula:
    """
    Plugs binding into schema, renaming term metavariables per `terms`.

    Args:
        schema (Schema): the schema to instantiate.
        binding (Mapping): metavariable name -> Instance (or Formula for 0-ary ones).
        terms (Mapping): term metavariable -> variable name; unmentioned ones stay put.
        strict (bool): reject binding keys that are not metavariables of the schema.

    Raises:
        SortClash, ArityMismatch, CaptureViolation, UnboundMetavariable
    """
    terms = dict(terms or {})
    resolved = _resolve_binding(schema, binding, strict)
    if strict:
        unknown = set(terms) - schema.variables()
        if unknown:
            raise UnboundMetavariable(f"Schema '{schema.name}' has no term metavariable "
                                      f"{', '.join(sorted(unknown))}.")
    return _plug(schema.body, resolved, terms, [])


def _resolve_binding(schema: Schema, binding: Binding, strict: bool) -> dict[str, Instance]:
    resolved: dict[str, Instance] = {}
    for meta in schema.metavariables:
        if meta.name not in binding:
            raise UnboundMetavariable(f"Schema '{schema.name}': metavariable '{meta.name}' is not bound.")
        inst = as_instance(binding[meta.name])
        if inst.sort is not meta.sort:
            raise SortClash(f"Schema '{schema.name}': '{meta.name}' is a {meta.sort.value} "
                            f"metavariable but is bound to a {inst.sort.value}.")
        if len(inst.params) != meta.arity:
            raise ArityMismatch(f"Schema '{schema.name}': '{meta.name}' has {meta.arity} slot(s) "
                                f"but the binding names {len(inst.params)} parameter(s).")
        if len(set(inst.params)) != len(inst.params):
            raise ArityMismatch(f"Schema '{schema.name}': parameters of '{meta.name}' are not distinct.")
        resolved[meta.name] = inst
    if strict:
        extra = set(binding) - set(resolved)
        if extra:
            raise UnboundMetavariable(f"Schema '{schema.name}' has no metavariable "
                                      f"{', '.join(sorted(extra))}.")
    return resolved


def _rename_arg(arg: str, terms: Mapping[str, str], scope: list[tuple[str, str]]) -> str:
    # scope: (schema binder, renamed binder), innermost last
    for depth in range(len(scope) - 1, -1, -1):
        original, renamed = scope[depth]
        if original == arg:
            if any(inner == renamed for _, inner in scope[depth + 1:]):
                raise CaptureViolation(f"Renaming binds '{arg}' to '{renamed}', which an inner "
                                       f"quantifier captures.")
            return renamed
    renamed = terms.get(arg, arg)
    if any(inner == renamed for _, inner in scope):
        raise CaptureViolation(f"Term '{renamed}' substituted for '{arg}' is captured by a quantifier "
                               f"of the schema.")
    return renamed


def _plug(f: Formula, binding: dict[str, Instance], terms: Mapping[str, str],
          scope: list[tuple[str, str]]) -> Formula:
    if isinstance(f, Atom):
        args = tuple(_rename_arg(a, terms, scope) for a in f.args)
        inst = binding.get(f.name)
        if inst is None:
            return f if args == f.args else Atom(f.name, args, f.sort)
        bound_here = {renamed for _, renamed in scope}
        leaked = (free_vars(inst.body) - set(inst.params)) & bound_here
        if leaked:
            raise CaptureViolation(f"Variable(s) {', '.join(sorted(leaked))} free in the instance of "
                                   f"'{f.name}' would be captured by the schema's quantifiers.")
        return inst.apply(args)
    if isinstance(f, QUANTIFIERS):
        renamed = terms.get(f.var, f.var)
        scope.append((f.var, renamed))
        try:
            return type(f)(renamed, _plug(f.body, binding, terms, scope))
        finally:
            scope.pop()
    parts = children(f)
    if not parts:
        return f
    return rebuild(f, *(_plug(p, binding, terms, scope) for p in parts))


# -----------------------------
# Matching (used by the pre-kernel proof builder only)
# -----------------------------

def match_schema(schema: Schema, target: Formula, binding: Binding | None = None,
                 terms: Mapping[str, str] | None = None) -> tuple[dict[str, Instance], dict[str, str]] | None:
    """
    Finds a binding and term renaming under which schema instantiates to target.
    Metavariables with slots are solved when their arguments are distinct variables.
    Returns None when no solution is found; the kernel re-checks any answer.
    """
    matcher = _Matcher(schema, binding, terms)
    if not matcher.walk(schema.body, target, []):
        return None
    if not matcher.solve():
        return None
    try:
        if instantiate(schema, matcher.binding, matcher.terms) != target:
            return None
    except (SortClash, ArityMismatch, CaptureViolation, UnboundMetavariable):
        return None
    return matcher.binding, matcher.terms


class _Matcher:

    def __init__(self, schema: Schema, binding: Binding | None, terms: Mapping[str, str] | None):
        self.metas = {m.name: m for m in schema.metavariables}
        self.binding: dict[str, Instance] = {k: as_instance(v) for k, v in (binding or {}).items()}
        self.terms: dict[str, str] = dict(terms or {})
        self.pending: list[tuple[Atom, Formula, frozenset[str]]] = []

    def _assign(self, var: str, value: str) -> bool:
        known = self.terms.get(var)
        if known is None:
            self.terms[var] = value
            return True
        return known == value

    def walk(self, pattern: Formula, target: Formula, scope: list[str]) -> bool:
        if isinstance(pattern, Atom) and pattern.name in self.metas:
            if target.sort is not pattern.sort:
                return False
            self.pending.append((pattern, target, frozenset(scope)))
            return True
        if type(pattern) is not type(target):
            return False
        if isinstance(pattern, Atom):
            if pattern.name != target.name or pattern.sort is not target.sort \
                    or len(pattern.args) != len(target.args):
                return False
            return all(self._assign(p, t) for p, t in zip(pattern.args, target.args))
        if isinstance(pattern, QUANTIFIERS):
            if not self._assign(pattern.var, target.var):
                return False
            return self.walk(pattern.body, target.body, scope + [target.var])
        return all(self.walk(p, t, scope) for p, t in zip(children(pattern), children(target)))

    def solve(self) -> bool:
        todo = list(self.pending)
        while todo:
            progress = False
            for item in list(todo):
                outcome = self._try(*item)
                if outcome is None:
                    continue
                if not outcome:
                    return False
                todo.remove(item)
                progress = True
            if not progress:
                # leftover term metavariables default to themselves
                for atom, _, _ in todo:
                    for arg in atom.args:
                        self.terms.setdefault(arg, arg)
                return all(self._try(*item) for item in todo)
        return True

    def _try(self, atom: Atom, target: Formula, scope: frozenset[str]) -> bool | None:
        known = [self.terms.get(a) for a in atom.args]
        inst = self.binding.get(atom.name)
        if inst is not None:
            if all(k is not None for k in known):
                try:
                    return inst.apply(tuple(known)) == target
                except (CaptureViolation, ArityMismatch):
                    return False
            missing = [i for i, k in enumerate(known) if k is None]
            candidates = sorted(free_vars(target) | scope | {atom.args[i] for i in missing})
            for choice in itertools.product(candidates, repeat=len(missing)):
                args = list(known)
                for i, value in zip(missing, choice):
                    args[i] = value
                try:
                    if inst.apply(tuple(args)) == target:
                        for i, value in zip(missing, choice):
                            self.terms[atom.args[i]] = value
                        return True
                except (CaptureViolation, ArityMismatch):
                    continue
            return False
        if any(k is None for k in known):
            return None
        if len(set(known)) != len(known):
            return None if atom.args else False
        self.binding[atom.name] = Instance(target, tuple(known))
        return True
