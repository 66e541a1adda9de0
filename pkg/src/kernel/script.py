# src/kernel/script.py

"""
Reader and writer for the `.qp` proof-script format.

    # comment
    calculus QHC
    prob a.  prop p, q.
    hyp !p
    goal p
    1. !p by hyp 1
    2. ?!p by rule wn_top 1
    3. ?!p -> p by axiom wn_oc [P:=p]
    4. p by mp 3 2

Justifications: `axiom NAME [..]`, `mp m k`, `gen m x`, `rule NAME m.. [..]`,
`lemma ID m.. [..]`, `hyp i`. A binding list holds `A:=formula`,
`A(x,y):=formula` and `t:=y` (term renaming) items separated by commas.
"""

from __future__ import annotations

import re
from typing import Iterable

from calculi.calculi import get_calculus
from kernel.kernel import (
    Axiom, Generalization, Hypothesis, Lemma, LemmaSource, Line, ModusPonens, Proof, Rule,
)
from logic.errors import QHCError, ScriptError
from logic.formula import Signature, atoms_of
from logic.parser import parse_formula, parse_signature
from logic.printer import format_formula
from logic.schema import Instance, as_instance

_NUMBERED = re.compile(r"^(\d+)\s*\.\s+(.*)$")
_BY = re.compile(r"\s+by\s+")
_LHS = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)\s*(?:\(([^()]*)\))?$")


def _split_top(text: str, sep: str = ",") -> list[str]:
    """Splits at sep outside parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if "".join(current).strip():
        parts.append("".join(current))
    return [p.strip() for p in parts]


class _ScriptReader:

    def __init__(self, text: str, sig: Signature | None, registry: LemmaSource | None):
        self.text = text
        self.sig = sig or Signature()
        self.registry = registry
        self.calculus: str | None = None
        self.hypotheses: list = []
        self.goal = None
        self.lines: list[Line] = []

    def read(self) -> Proof:
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                self._line(text, lineno)
            except ScriptError:
                raise
            except QHCError as e:
                raise ScriptError(str(e), lineno) from None
        if self.calculus is None:
            raise ScriptError("missing 'calculus NAME' header")
        if not self.lines:
            raise ScriptError("the script has no proof lines")
        goal = self.goal if self.goal is not None else self.lines[-1].formula
        return Proof(self.calculus, self.sig, tuple(self.hypotheses), tuple(self.lines), goal)

    def _line(self, text: str, lineno: int):
        keyword = text.split(None, 1)[0]
        rest = text[len(keyword):].strip()
        if keyword == "calculus":
            self.calculus = rest
        elif keyword in ("prob", "prop"):
            self.sig = self.sig.merge(parse_signature(text))
        elif keyword == "hyp":
            self.hypotheses.append(parse_formula(rest, self.sig))
        elif keyword == "goal":
            self.goal = parse_formula(rest, self.sig)
        else:
            match = _NUMBERED.match(text)
            if not match:
                raise ScriptError(f"cannot read '{text}'", lineno)
            number, body = int(match.group(1)), match.group(2)
            if number != len(self.lines) + 1:
                raise ScriptError(f"expected line number {len(self.lines) + 1}, found {number}", lineno)
            pieces = _BY.split(body)
            if len(pieces) != 2:
                raise ScriptError("a proof line needs exactly one 'by'", lineno)
            formula = parse_formula(pieces[0], self.sig)
            self.lines.append(Line(formula, self._justification(pieces[1].strip(), lineno)))

    def _justification(self, text: str, lineno: int):
        binding_text = None
        if text.endswith("]"):
            start = text.find("[")
            if start < 0:
                raise ScriptError("unbalanced binding brackets", lineno)
            binding_text = text[start + 1:-1]
            text = text[:start].strip()
        words = text.split()
        if not words:
            raise ScriptError("empty justification", lineno)
        kind, args = words[0], words[1:]
        try:
            if kind == "hyp":
                (index,) = args
                return Hypothesis(int(index))
            if kind == "mp":
                first, second = args
                return ModusPonens(int(first), int(second))
            if kind == "gen":
                line, var = args
                return Generalization(int(line), var)
            if kind in ("axiom", "rule", "lemma"):
                name, refs = args[0], tuple(int(a) for a in args[1:])
                if kind == "axiom" and refs:
                    raise ScriptError("an axiom cites no lines", lineno)
                binding, terms = self._binding(kind, name, binding_text or "", lineno)
                if kind == "axiom":
                    return Axiom(name, binding, terms)
                if kind == "rule":
                    return Rule(name, refs, binding, terms)
                return Lemma(name, binding, terms, refs)
        except (ValueError, IndexError):
            raise ScriptError(f"malformed '{kind}' justification", lineno) from None
        raise ScriptError(f"unknown justification '{kind}'", lineno)

    def _schematic_names(self, kind: str, name: str) -> set[str] | None:
        """Names that take formulas in a binding; None when unknown (lemmas without a registry)."""
        if kind == "lemma":
            if self.registry is None:
                return None
            entry = self.registry.lemma(name)
            names = set()
            for f in (*entry.hypotheses, entry.goal):
                names |= {a.name for a in atoms_of(f)}
            return names
        calculus = get_calculus(self.calculus) if self.calculus else None
        if calculus is None:
            return None
        table = calculus.axioms if kind == "axiom" else calculus.rules
        names = set()
        for variant in table.get(name, ()):
            names |= {m.name for m in variant.metavariables}
        return names

    def _binding(self, kind: str, name: str, text: str, lineno: int) -> tuple[dict, dict]:
        binding: dict[str, Instance] = {}
        terms: dict[str, str] = {}
        schematic = self._schematic_names(kind, name)
        for item in _split_top(text):
            if ":=" not in item:
                raise ScriptError(f"binding item '{item}' has no ':='", lineno)
            lhs, rhs = (s.strip() for s in item.split(":=", 1))
            match = _LHS.match(lhs)
            if not match:
                raise ScriptError(f"cannot read binding target '{lhs}'", lineno)
            meta, params = match.group(1), match.group(2)
            is_formula = params is not None or (meta in schematic if schematic is not None
                                                 else meta in self.sig)
            if is_formula:
                slots = tuple(p.strip() for p in params.split(",")) if params else ()
                binding[meta] = Instance(parse_formula(rhs, self.sig), slots)
            else:
                terms[meta] = rhs
        return binding, terms


def parse_script(text: str, sig: Signature | None = None, registry: LemmaSource | None = None) -> Proof:
    """
    Reads a proof script.

    Raises:
        ScriptError: with the offending line number.
    """
    return _ScriptReader(text, sig, registry).read()


def _format_binding(binding, terms) -> str:
    items = []
    for name, value in binding.items():
        value = as_instance(value)
        lhs = f"{name}({','.join(value.params)})" if value.params else name
        items.append(f"{lhs}:={format_formula(value.body)}")
    items += [f"{t}:={v}" for t, v in terms.items()]
    return f" [{', '.join(items)}]" if items else ""


def format_justification(just) -> str:
    if isinstance(just, Hypothesis):
        return f"hyp {just.index}"
    if isinstance(just, ModusPonens):
        return f"mp {just.first} {just.second}"
    if isinstance(just, Generalization):
        return f"gen {just.line} {just.var}"
    if isinstance(just, Axiom):
        return f"axiom {just.name}{_format_binding(just.binding, just.terms)}"
    refs = "".join(f" {p}" for p in just.premises)
    kind = "rule" if isinstance(just, Rule) else "lemma"
    return f"{kind} {just.name if isinstance(just, Rule) else just.id}{refs}{_format_binding(just.binding, just.terms)}"


def write_script(proof: Proof, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"calculus {proof.calculus}")
    if len(proof.signature):
        out.append(proof.signature.to_text())
    out += [f"hyp {format_formula(h)}" for h in proof.hypotheses]
    out.append(f"goal {format_formula(proof.goal)}")
    width = len(str(len(proof.lines)))
    for n, line in enumerate(proof.lines, start=1):
        out.append(f"{n:>{width}}. {format_formula(line.formula)} by {format_justification(line.justification)}")
    return "\n".join(out) + "\n"
