# src/kernel/builder.py

"""
ProofBuilder: writes kernel proofs from natural-deduction style steps.

Nothing here is trusted. The builder keeps a flat store of lines, each tagged with
the open assumptions it depends on. discharge() compiles the deduction theorem
into K/S/MP lines (and Gen into the all_i axiom), build() prunes and renumbers,
and the kernel re-checks whatever comes out.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Mapping

from calculi.calculi import Calculus, get_calculus
from kernel.kernel import (
    Axiom, Generalization, Hypothesis, Lemma, LemmaSource, Line, ModusPonens, Proof, Rule,
    identity_binding, instantiate_lemma, lemma_schemata,
)
from logic.errors import DeductionError, QHCError
from logic.formula import (
    And, Atom, Exists, Forall, Formula, Imp, Or, Signature, falsum, free_vars, neg, subformulas,
    subst_term,
)
from logic.parser import parse_formula
from logic.printer import format_formula
from logic.schema import Instance, Schema, as_instance, instantiate, lam, match_schema

logger = logging.getLogger(__name__)

Ref = int


@dataclass(frozen=True)
class _Assumed:
    id: int


@dataclass(frozen=True)
class _Entry:
    formula: Formula
    justification: object
    deps: frozenset


def _restrict(schema: Schema) -> Schema:
    """schema with only the metavariables that occur in its body."""
    used = {g.name for g in subformulas(schema.body) if isinstance(g, Atom)}
    return Schema(schema.body, tuple(m for m in schema.metavariables if m.name in used), schema.name)


def _match(schema: Schema, target: Formula, binding: dict, terms: dict) -> tuple[dict, dict] | None:
    part = _restrict(schema)
    own = {m.name for m in part.metavariables}
    names = part.variables()
    found = match_schema(part, target,
                         {k: v for k, v in binding.items() if k in own},
                         {k: v for k, v in terms.items() if k in names})
    if found is None:
        return None
    return {**binding, **found[0]}, {**terms, **found[1]}


def _is_identity(name: str, value: Instance) -> bool:
    body = value.body
    return isinstance(body, Atom) and body.name == name and body.args == value.params


class ProofBuilder:
    """
    Args:
        calculus (str | Calculus): calculus the proof is written in.
        sig (Signature): signature of every line.
        hypotheses (tuple): kernel hypotheses, cited with hyp(i).
        registry (LemmaSource): resolves lemma() citations.
    """

    def __init__(self, calculus: str | Calculus, sig: Signature, hypotheses=(), registry: LemmaSource | None = None):
        self.calculus = calculus if isinstance(calculus, Calculus) else get_calculus(calculus)
        self.sig = sig
        self.hypotheses = tuple(self.f(h) for h in hypotheses)
        self.registry = registry
        self._lines: list[_Entry] = []
        self._closed: dict[Formula, Ref] = {}
        self._stack: list[tuple[int, Ref]] = []
        self._next_assumption = 0
        self._hypothesis_vars = frozenset().union(*(free_vars(h) for h in self.hypotheses))

    # ---- plumbing ----

    def f(self, x) -> Formula:
        """A formula from text (parsed over the builder's signature), a Formula or a line."""
        if isinstance(x, Formula):
            return x
        if isinstance(x, int):
            return self._lines[x].formula
        return parse_formula(x, self.sig)

    def lam(self, params: str, body) -> Instance:
        return lam(params, self.f(body))

    def have(self, ref: Ref, expected) -> Ref:
        """Asserts that line ref proves `expected`; returns ref."""
        if self.f(ref) != self.f(expected):
            raise DeductionError(f"expected {format_formula(self.f(expected))}, "
                                 f"the line proves {format_formula(self.f(ref))}")
        return ref

    def deps(self, ref: Ref) -> frozenset:
        return self._lines[ref].deps

    def _value(self, value) -> Instance:
        return value if isinstance(value, Instance) else as_instance(self.f(value))

    def _add(self, formula: Formula, justification, deps: frozenset = frozenset()) -> Ref:
        if not deps and formula in self._closed:
            return self._closed[formula]
        self._lines.append(_Entry(formula, justification, frozenset(deps)))
        ref = len(self._lines) - 1
        if not deps:
            self._closed[formula] = ref
        return ref

    # ---- primitive steps ----

    def hyp(self, index: int) -> Ref:
        """Kernel hypothesis number index (1-based)."""
        if not 1 <= index <= len(self.hypotheses):
            raise DeductionError(f"there is no hypothesis {index}")
        return self._add(self.hypotheses[index - 1], Hypothesis(index))

    def assume(self, formula) -> Ref:
        formula = self.f(formula)
        aid = self._next_assumption
        self._next_assumption += 1
        self._lines.append(_Entry(formula, _Assumed(aid), frozenset({aid})))
        ref = len(self._lines) - 1
        self._stack.append((aid, ref))
        return ref

    def axiom(self, name: str, target=None, terms: Mapping[str, str] | None = None, **binding) -> Ref:
        """An axiom instance; the binding is inferred from target when one is given."""
        if name not in self.calculus.axioms:
            raise DeductionError(f"'{name}' is not an axiom of {self.calculus.name}")
        given = {k: self._value(v) for k, v in binding.items()}
        terms = dict(terms or {})
        target = None if target is None else self.f(target)
        for schema in self.calculus.axioms[name]:
            try:
                if target is not None:
                    found = match_schema(schema, target, given, terms)
                    if found is None:
                        continue
                    full, full_terms = found
                    formula = target
                else:
                    full, full_terms = given, terms
                    formula = instantiate(schema, full, full_terms)
            except QHCError:
                continue
            return self._add(formula, Axiom(name, self._clean(full), self._clean_terms(full_terms)))
        wanted = format_formula(target) if target is not None else "the given binding"
        raise DeductionError(f"axiom '{name}' does not produce {wanted}")

    def rule(self, name: str, *premises: Ref, target=None, terms: Mapping[str, str] | None = None,
             **binding) -> Ref:
        if name not in self.calculus.rules:
            raise DeductionError(f"'{name}' is not a rule of {self.calculus.name}")
        cited = [self.f(p) for p in premises]
        target = None if target is None else self.f(target)
        for rule in self.calculus.rules[name]:
            if len(rule.premises) != len(cited):
                continue
            found = self._match_all([*zip(rule.premises, cited),
                                     *([(rule.conclusion, target)] if target is not None else [])],
                                    {k: self._value(v) for k, v in binding.items()}, dict(terms or {}))
            if found is None:
                continue
            full, full_terms = found
            try:
                conclusion = instantiate(rule.conclusion, full, full_terms, strict=False)
            except QHCError:
                continue
            deps = frozenset().union(*(self.deps(p) for p in premises))
            return self._add(conclusion, Rule(name, tuple(premises), self._clean(full),
                                              self._clean_terms(full_terms)), deps)
        raise DeductionError(f"rule '{name}' does not apply to {', '.join(map(format_formula, cited))}")

    def lemma(self, id: str, *premises: Ref, target=None, terms: Mapping[str, str] | None = None,
              **binding) -> Ref:
        """Cites a corpus entry; atoms the match leaves open stand for themselves."""
        if self.registry is None:
            raise DeductionError("no lemma registry is available")
        entry = self.registry.lemma(id)
        if not self.calculus.includes(entry.calculus):
            raise DeductionError(f"lemma '{id}' is proved in {entry.calculus}, "
                                 f"which {self.calculus.name} does not include")
        hyps, goal = lemma_schemata(entry)
        if len(hyps) != len(premises):
            raise DeductionError(f"lemma '{id}' takes {len(hyps)} premise(s), {len(premises)} given")
        target = None if target is None else self.f(target)
        pairs = ([(goal, target)] if target is not None else []) + list(zip(hyps, (self.f(p) for p in premises)))
        found = self._match_all(pairs, {k: self._value(v) for k, v in binding.items()}, dict(terms or {}))
        if found is None:
            raise DeductionError(f"lemma '{id}' does not match "
                                 f"{format_formula(target) if target is not None else 'its premises'}")
        full, full_terms = found
        full = {k: v for k, v in full.items() if not _is_identity(k, v)}
        full_terms = {k: v for k, v in full_terms.items() if k != v}
        wanted, conclusion = instantiate_lemma(entry, full, full_terms)
        for p, w in zip(premises, wanted):
            if self.f(p) != w:
                raise DeductionError(f"lemma '{id}' needs {format_formula(w)}, got {format_formula(self.f(p))}")
        deps = frozenset().union(*(self.deps(p) for p in premises))
        return self._add(conclusion, Lemma(id, full, full_terms, tuple(premises)), deps)

    def _match_all(self, pairs, binding: dict, terms: dict) -> tuple[dict, dict] | None:
        for schema, formula in pairs:
            found = _match(schema, formula, binding, terms)
            if found is None:
                return None
            binding, terms = found
        return binding, terms

    @staticmethod
    def _clean(binding: Mapping) -> dict:
        return {k: as_instance(v) for k, v in sorted(binding.items())}

    @staticmethod
    def _clean_terms(terms: Mapping[str, str]) -> dict:
        return dict(sorted(terms.items()))

    def mp(self, x: Ref, y: Ref) -> Ref:
        """Modus ponens; the implication may come first or second."""
        fx, fy = self.f(x), self.f(y)
        if isinstance(fx, Imp) and fx.left == fy:
            major, minor = x, y
        elif isinstance(fy, Imp) and fy.left == fx:
            major, minor = y, x
        else:
            raise DeductionError(f"modus ponens does not apply to {format_formula(fx)} and {format_formula(fy)}")
        return self._add(self.f(major).right, ModusPonens(minor, major), self.deps(x) | self.deps(y))

    def gen(self, ref: Ref, var: str) -> Ref:
        if var in self._hypothesis_vars:
            raise DeductionError(f"'{var}' is free in a hypothesis")
        for aid, line in self._stack:
            if aid in self.deps(ref) and var in free_vars(self.f(line)):
                raise DeductionError(f"'{var}' is free in the open assumption {format_formula(self.f(line))}")
        return self._add(Forall(var, self.f(ref)), Generalization(ref, var), self.deps(ref))

    # ---- deduction ----

    def discharge(self, assumption: Ref, ref: Ref) -> Ref:
        """From the innermost open assumption A and a line B, the line A -> B."""
        if not self._stack or self._stack[-1][1] != assumption:
            raise DeductionError("assumptions must be discharged innermost first")
        aid, _ = self._stack.pop()
        return self._lift(aid, assumption, ref, {})

    def _lift(self, aid: int, assumption: Ref, ref: Ref, memo: dict) -> Ref:
        if ref in memo:
            return memo[ref]
        a = self.f(assumption)
        entry = self._lines[ref]
        deps = entry.deps - {aid}
        formula = Imp(a, entry.formula)
        just = entry.justification
        if aid not in entry.deps:
            k = self.axiom("K", A=entry.formula, B=a)
            result = self._add(formula, ModusPonens(ref, k), deps)
        elif ref == assumption:
            result = self.identity(a)
        elif isinstance(just, ModusPonens):
            minor, major = just.first, just.second
            if minor == assumption and aid not in self.deps(major):
                result = major
            else:
                lifted_major = self._lift(aid, assumption, major, memo)
                lifted_minor = self._lift(aid, assumption, minor, memo)
                middle = self.f(minor)
                s = self.axiom("S", A=a, B=middle, C=entry.formula)
                step = self._add(Imp(Imp(a, middle), formula), ModusPonens(lifted_major, s),
                                 self.deps(lifted_major))
                result = self._add(formula, ModusPonens(lifted_minor, step), deps)
        elif isinstance(just, Generalization):
            if just.var in free_vars(a):
                raise DeductionError(f"cannot discharge {format_formula(a)} through a generalization "
                                     f"on its free variable '{just.var}'")
            body = self.f(just.line)
            lifted = self._lift(aid, assumption, just.line, memo)
            general = self._add(Forall(just.var, Imp(a, body)), Generalization(lifted, just.var), deps)
            ax = self.axiom("all_i", A=Instance(body, (just.var,)), C=a, terms={"x": just.var})
            result = self._add(formula, ModusPonens(general, ax), deps)
        else:
            kind = type(just).__name__.lower()
            raise DeductionError(f"cannot discharge {format_formula(a)} through a {kind} step "
                                 f"concluding {format_formula(entry.formula)}")
        memo[ref] = result
        return result

    # ---- tactics ----

    def identity(self, a) -> Ref:
        """A -> A from K and S."""
        a = self.f(a)
        aa = Imp(a, a)
        k1 = self.axiom("K", A=a, B=aa)
        s = self.axiom("S", A=a, B=aa, C=a)
        step = self.mp(k1, s)
        k2 = self.axiom("K", A=a, B=a)
        return self.mp(k2, step)

    def syl(self, ab: Ref, bc: Ref) -> Ref:
        """A -> B, B -> C gives A -> C."""
        h = self.assume(self.f(ab).left)
        return self.discharge(h, self.mp(bc, self.mp(ab, h)))

    def chain(self, *steps: Ref) -> Ref:
        result = steps[0]
        for step in steps[1:]:
            result = self.syl(result, step)
        return result

    def conj(self, x: Ref, y: Ref) -> Ref:
        ax = self.axiom("and_i", A=self.f(x), B=self.f(y))
        return self.mp(y, self.mp(x, ax))

    def left(self, ref: Ref) -> Ref:
        f = self.f(ref)
        return self.mp(ref, self.axiom("and_l", A=f.left, B=f.right))

    def right(self, ref: Ref) -> Ref:
        f = self.f(ref)
        return self.mp(ref, self.axiom("and_r", A=f.left, B=f.right))

    def iff(self, ab: Ref, ba: Ref) -> Ref:
        return self.conj(ab, ba)

    def swap_iff(self, ref: Ref) -> Ref:
        """A <-> B gives B <-> A."""
        return self.conj(self.right(ref), self.left(ref))

    def contrapose(self, ab: Ref) -> Ref:
        """A -> B gives ~B -> ~A."""
        f = self.f(ab)
        nb = self.assume(neg(f.right))
        a = self.assume(f.left)
        absurd = self.mp(nb, self.mp(ab, a))
        return self.discharge(nb, self.discharge(a, absurd))

    def imp_map(self, pre: Ref, post: Ref) -> Ref:
        """C -> A and B -> D give (A -> B) -> (C -> D)."""
        fp, fq = self.f(pre), self.f(post)
        h = self.assume(Imp(fp.right, fq.left))
        return self.discharge(h, self.chain(pre, h, post))

    def conj_map(self, ac: Ref, bd: Ref) -> Ref:
        """A -> C and B -> D give A & B -> C & D."""
        fa, fb = self.f(ac), self.f(bd)
        h = self.assume(And(fa.left, fb.left))
        return self.discharge(h, self.conj(self.mp(ac, self.left(h)), self.mp(bd, self.right(h))))

    def disj_map(self, ac: Ref, bd: Ref) -> Ref:
        """A -> C and B -> D give A | B -> C | D."""
        fa, fb = self.f(ac), self.f(bd)
        c, d = fa.right, fb.right
        to_c = self.syl(ac, self.axiom("or_l", A=c, B=d))
        to_d = self.syl(bd, self.axiom("or_r", A=c, B=d))
        ax = self.axiom("or_e", A=fa.left, B=fb.left, C=Or(c, d))
        return self.mp(to_d, self.mp(to_c, ax))

    def or_l(self, ref: Ref, other) -> Ref:
        """A gives A | B."""
        return self.mp(ref, self.axiom("or_l", A=self.f(ref), B=self.f(other)))

    def or_r(self, ref: Ref, other) -> Ref:
        """B gives A | B."""
        return self.mp(ref, self.axiom("or_r", A=self.f(other), B=self.f(ref)))

    def cases(self, disj: Ref, ac: Ref, bc: Ref) -> Ref:
        """A | B, A -> C, B -> C give C."""
        d = self.f(disj)
        ax = self.axiom("or_e", A=d.left, B=d.right, C=self.f(ac).right)
        return self.mp(disj, self.mp(bc, self.mp(ac, ax)))

    def efq(self, absurd: Ref, target) -> Ref:
        target = self.f(target)
        return self.mp(absurd, self.axiom("efq", target=Imp(falsum(target.sort), target)))

    def wn(self, ref: Ref) -> Ref:
        return self.rule("wn_top", ref)

    def oc(self, ref: Ref) -> Ref:
        return self.rule("oc_top", ref)

    def monotone_wn(self, ab: Ref) -> Ref:
        """A -> B gives ?A -> ?B."""
        f = self.f(ab)
        return self.mp(self.wn(ab), self.axiom("wn_imp", A=f.left, B=f.right))

    def monotone_oc(self, pq: Ref) -> Ref:
        """P -> Q gives !P -> !Q."""
        f = self.f(pq)
        return self.mp(self.oc(pq), self.axiom("oc_imp", P=f.left, Q=f.right))

    def monotone_box(self, pq: Ref) -> Ref:
        """P -> Q gives ?!P -> ?!Q."""
        return self.monotone_wn(self.monotone_oc(pq))

    def monotone_nabla(self, ab: Ref) -> Ref:
        """A -> B gives !?A -> !?B."""
        return self.monotone_oc(self.monotone_wn(ab))

    def all_elim(self, ref: Ref, term: str) -> Ref:
        f = self.f(ref)
        instance = subst_term(f.body, f.var, term)
        return self.mp(ref, self.axiom("all_e", target=Imp(f, instance)))

    def ex_intro(self, ref: Ref, target) -> Ref:
        """A(t) gives the given exists x. A(x)."""
        return self.mp(ref, self.axiom("ex_i", target=Imp(self.f(ref), self.f(target))))

    def all_intro_imp(self, ref: Ref) -> Ref:
        """forall x. (C -> A(x)) gives C -> forall x. A(x)."""
        f = self.f(ref)
        target = Imp(f.body.left, Forall(f.var, f.body.right))
        return self.mp(ref, self.axiom("all_i", target=Imp(f, target)))

    def ex_elim(self, ref: Ref) -> Ref:
        """forall x. (A(x) -> C) gives exists x. A(x) -> C."""
        f = self.f(ref)
        target = Imp(Exists(f.var, f.body.left), f.body.right)
        return self.mp(ref, self.axiom("ex_e", target=Imp(f, target)))

    def all_map(self, ab: Ref, var: str) -> Ref:
        """A(x) -> B(x) gives forall x. A(x) -> forall x. B(x)."""
        f = self.f(ab)
        h = self.assume(Forall(var, f.left))
        return self.discharge(h, self.gen(self.mp(ab, self.all_elim(h, var)), var))

    def ex_map(self, ab: Ref, var: str) -> Ref:
        """A(x) -> B(x) gives exists x. A(x) -> exists x. B(x)."""
        f = self.f(ab)
        step = self.syl(ab, self.axiom("ex_i", target=Imp(f.right, Exists(var, f.right))))
        return self.ex_elim(self.gen(step, var))

    # ---- output ----

    def build(self, goal: Ref | None = None) -> Proof:
        """The kernel proof of line goal (default: the last line), pruned and renumbered."""
        if self._stack:
            raise DeductionError(f"{len(self._stack)} assumption(s) are still open")
        goal = len(self._lines) - 1 if goal is None else goal
        if self.deps(goal):
            raise DeductionError("the goal depends on an undischarged assumption")
        needed: set[Ref] = set()
        todo = [goal]
        while todo:
            ref = todo.pop()
            if ref in needed:
                continue
            needed.add(ref)
            todo.extend(_references(self._lines[ref].justification))
        order = sorted(needed)
        numbers = {ref: n for n, ref in enumerate(order, start=1)}
        lines = tuple(Line(self._lines[ref].formula, _renumber(self._lines[ref].justification, numbers))
                      for ref in order)
        logger.debug("built %d line proof of %s", len(lines), format_formula(self.f(goal)))
        return Proof(self.calculus.name, self.sig, self.hypotheses, lines, self.f(goal))


def _references(just) -> tuple[int, ...]:
    if isinstance(just, ModusPonens):
        return (just.first, just.second)
    if isinstance(just, Generalization):
        return (just.line,)
    if isinstance(just, (Rule, Lemma)):
        return just.premises
    return ()


def _renumber(just, numbers: Mapping[int, int]):
    if isinstance(just, ModusPonens):
        return ModusPonens(numbers[just.first], numbers[just.second])
    if isinstance(just, Generalization):
        return Generalization(numbers[just.line], just.var)
    if isinstance(just, (Rule, Lemma)):
        return replace(just, premises=tuple(numbers[p] for p in just.premises))
    if isinstance(just, _Assumed):
        raise DeductionError("an assumption line survived into the proof")
    return just


# -----------------------------
# Lemma splicing
# -----------------------------

def inline_lemmas(proof: Proof, registry: LemmaSource, _cache: dict | None = None) -> Proof:
    """
    The same proof with every Lemma line replaced by the cited entry's proof,
    instantiated under the citation's binding. The result cites no lemmas.
    """
    cache = {} if _cache is None else _cache
    out: list[Line] = []
    numbers: dict[int, int] = {}
    for n, line in enumerate(proof.lines, start=1):
        just = line.justification
        if isinstance(just, Lemma):
            entry = registry.lemma(just.id)
            if entry.id not in cache:
                cache[entry.id] = inline_lemmas(entry.proof, registry, cache)
            numbers[n] = _splice(cache[entry.id], entry, just, [numbers[p] for p in just.premises], out)
        else:
            out.append(Line(line.formula, _renumber(just, numbers)))
            numbers[n] = len(out)
    return Proof(proof.calculus, proof.signature, proof.hypotheses, tuple(out), proof.goal)


def _splice(inner: Proof, entry, citation: Lemma, premises: list[int], out: list[Line]) -> int:
    _, goal = lemma_schemata(entry)
    metas = goal.metavariables
    binding = identity_binding(goal, citation.binding)
    terms = dict(citation.terms)

    def sub(f: Formula) -> Formula:
        return instantiate(Schema(f, metas), binding, terms, strict=False)

    def sub_binding(b: Mapping) -> dict:
        result = {}
        for name, value in b.items():
            value = as_instance(value)
            result[name] = Instance(sub(value.body), tuple(terms.get(p, p) for p in value.params))
        return result

    local: dict[int, int] = {}
    for k, line in enumerate(inner.lines, start=1):
        just = line.justification
        if isinstance(just, Hypothesis):
            local[k] = premises[just.index - 1]
            continue
        if isinstance(just, Axiom):
            just = Axiom(just.name, sub_binding(just.binding),
                         {t: terms.get(v, v) for t, v in just.terms.items()})
        elif isinstance(just, Rule):
            just = Rule(just.name, tuple(local[p] for p in just.premises), sub_binding(just.binding),
                        {t: terms.get(v, v) for t, v in just.terms.items()})
        elif isinstance(just, Generalization):
            just = Generalization(local[just.line], terms.get(just.var, just.var))
        else:
            just = _renumber(just, local)
        out.append(Line(sub(line.formula), just))
        local[k] = len(out)
    return local[len(inner.lines)]
