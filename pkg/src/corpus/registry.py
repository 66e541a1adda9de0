# src/corpus/registry.py

"""
Corpus registry: every derived result with its statement, the calculus it is proved
in and the function that writes its proof.

Entry modules register with @corpus_entry. Proofs are built lazily, on first use;
a proof that cites another entry builds that entry first, so the build order is the
citation order. Every built proof is re-checked by the kernel before it is reported.
"""

from __future__ import annotations

import fnmatch
import logging
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import networkx as nx
from tqdm import tqdm

from calculi.calculi import RuleSchema
from kernel.builder import ProofBuilder, Ref
from kernel.kernel import Lemma, Proof, Rejected, Verdict, entry_verdict
from logic.errors import CyclicLemmaDependency, QHCError, UnknownLemma
from logic.formula import Formula, Signature, is_propositional
from logic.parser import parse_sequent, parse_signature
from logic.schema import Schema

logger = logging.getLogger(__name__)

SIGNATURE_TEXT = "prob a, b, c, d, pi(1). prop p, q, s, r(1)."
SIG = parse_signature(SIGNATURE_TEXT)

Build = Callable[[ProofBuilder], Ref]


@dataclass(frozen=True)
class EntrySpec:
    """
    Args:
        id (str): corpus identifier, e.g. galois.fwd.
        statement (str): `hyps |- goal` over the corpus signature; a bare formula is a law.
        calculus (str): calculus the proof is written in.
        anchor (str): where the result is stated, as a short citation.
        build (Build): writes the proof; returns the line of the goal.
    """
    id: str
    statement: str
    calculus: str
    anchor: str
    build: Build = field(repr=False, compare=False)


SPECS: dict[str, EntrySpec] = {}


def corpus_entry(id: str, statement: str, calculus: str = "QHC", anchor: str = ""):
    """Registers the decorated function as the proof of entry `id`."""
    def decorate(fn: Build) -> Build:
        if id in SPECS:
            raise ValueError(f"Corpus entry '{id}' is registered twice.")
        SPECS[id] = EntrySpec(id, statement, calculus, anchor, fn)
        return fn
    return decorate


# the sort-generic library is written once over three atoms and instantiated per sort
_LIBRARY_ATOMS = {
    "ipc": ("QH", {"A": "a", "B": "b", "C": "c"}),
    "cpc": ("QC", {"A": "p", "B": "q", "C": "s"}),
}


def library_lemma(name: str, template: str, anchor: str = "standard tautology",
                  families: Iterable[str] = ("ipc", "cpc")):
    """
    Registers one tautology for problems (ipc.<name>, in QH) and propositions
    (cpc.<name>, in QC). The template and the proof function speak of A, B and C;
    the function receives the builder and the three atoms as formulas.
    """
    def decorate(fn: Callable[..., Ref]) -> Callable[..., Ref]:
        for family in families:
            calculus, names = _LIBRARY_ATOMS[family]
            statement = re.sub(r"\b[ABC]\b", lambda m: names[m.group(0)], template)

            def build(b: ProofBuilder, _names=names) -> Ref:
                return fn(b, *(b.f(_names[k]) for k in "ABC"))

            corpus_entry(f"{family}.{name}", statement, calculus, anchor)(build)
        return fn
    return decorate


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    calculus: str
    statement: str
    anchor: str
    hypotheses: tuple[Formula, ...]
    goal: Formula
    proof: Proof
    citations: frozenset = frozenset()
    build_seconds: float = 0.0

    @property
    def is_rule(self) -> bool:
        return bool(self.hypotheses)

    @property
    def family(self) -> str:
        return self.id.split(".", 1)[0]

    def schema(self) -> Schema | RuleSchema:
        """The statement with every atom schematic."""
        frozen = Schema.frozen(self.goal, self.id, self.hypotheses)
        if not self.hypotheses:
            return frozen
        metas = frozen.metavariables
        return RuleSchema(self.id, tuple(Schema(h, metas, self.id) for h in self.hypotheses), frozen)

    def is_propositional(self) -> bool:
        return all(is_propositional(f) for f in (*self.hypotheses, self.goal))


class CorpusRegistry:
    """
    Builds and serves corpus entries; also the LemmaSource the kernel and the
    builder resolve citations against.
    """

    def __init__(self, specs: dict[str, EntrySpec] | None = None, sig: Signature = SIG):
        self.specs = dict(SPECS if specs is None else specs)
        self.sig = sig
        self._built: dict[str, CorpusEntry] = {}
        self._failed: dict[str, QHCError] = {}
        self._building: list[str] = []

    def __contains__(self, id: str) -> bool:
        return id in self.specs

    def __len__(self) -> int:
        return len(self.specs)

    def ids(self, pattern: str = "*") -> list[str]:
        return sorted(i for i in self.specs if fnmatch.fnmatchcase(i, pattern))

    def lemma(self, id: str) -> CorpusEntry:
        """
        Raises:
            UnknownLemma, CyclicLemmaDependency, or whatever error stopped the build
            (a failed build is not retried).
        """
        known = self._built.get(id)
        if known is not None:
            return known
        if id in self._failed:
            raise self._failed[id]
        spec = self.specs.get(id)
        if spec is None:
            raise UnknownLemma(f"No corpus entry '{id}'.")
        if id in self._building:
            cycle = " -> ".join(self._building[self._building.index(id):] + [id])
            raise CyclicLemmaDependency(f"Corpus entries cite each other in a cycle: {cycle}")
        self._building.append(id)
        try:
            entry = self._build(spec)
        except QHCError as e:
            self._failed[id] = e
            raise
        finally:
            self._building.pop()
        self._built[id] = entry
        return entry

    def _build(self, spec: EntrySpec) -> CorpusEntry:
        start = time.perf_counter()
        hypotheses, goal = parse_sequent(spec.statement, self.sig)
        builder = ProofBuilder(spec.calculus, self.sig, hypotheses, self)
        ref = spec.build(builder)
        builder.have(ref, goal)
        proof = builder.build(ref)
        citations = frozenset(line.justification.id for line in proof.lines
                              if isinstance(line.justification, Lemma))
        seconds = time.perf_counter() - start
        logger.debug("built %s: %d lines, cites %s", spec.id, len(proof), sorted(citations) or "nothing")
        return CorpusEntry(spec.id, spec.calculus, spec.statement, spec.anchor, tuple(hypotheses),
                           goal, proof, citations, seconds)

    def build_all(self, pattern: str = "*") -> list[CorpusEntry]:
        return [self.lemma(i) for i in self.ids(pattern)]

    def graph(self) -> nx.DiGraph:
        """
        Citation graph over every entry; an edge u -> v means v cites u. An entry
        whose build fails is an isolated node.
        """
        g = nx.DiGraph()
        for id in self.ids():
            g.add_node(id)
            try:
                entry = self.lemma(id)
            except QHCError as e:
                logger.warning("could not build %s: %s", id, e)
                continue
            for cited in entry.citations:
                g.add_edge(cited, id)
        return g

    def order(self, pattern: str = "*") -> list[str]:
        """Entries matching pattern, cited entries before the entries citing them."""
        wanted = set(self.ids(pattern))
        try:
            ordered = list(nx.lexicographical_topological_sort(self.graph()))
        except nx.NetworkXUnfeasible:
            raise CyclicLemmaDependency("The corpus citation graph has a cycle.") from None
        return [i for i in ordered if i in wanted]

    def layers(self, pattern: str = "*") -> list[list[str]]:
        """order() cut into generations; entries of one generation do not cite each other."""
        wanted = set(self.ids(pattern))
        return [sorted(i for i in generation if i in wanted)
                for generation in nx.topological_generations(self.graph())
                if any(i in wanted for i in generation)]


# -----------------------------
# Running
# -----------------------------

@dataclass(frozen=True)
class EntryResult:
    id: str
    calculus: str
    verdict: Verdict
    lines: int
    seconds: float
    certified: dict | None = None

    @property
    def ok(self) -> bool:
        return self.verdict.ok

    def to_dict(self) -> dict:
        row = {"id": self.id, "calculus": self.calculus, **self.verdict.to_dict(),
               "lines": self.lines, "seconds": round(self.seconds, 4)}
        if self.certified is not None:
            row["certified"] = self.certified
        return row


def check_entry(registry: CorpusRegistry, id: str, certify_entries: bool = False) -> EntryResult:
    """Builds (if needed) and kernel-checks one entry."""
    start = time.perf_counter()
    try:
        entry = registry.lemma(id)
    except QHCError as e:
        logger.debug("could not build %s: %s", id, e)
        spec = registry.specs.get(id)
        return EntryResult(id, spec.calculus if spec else "?", Rejected(0, f"build failed: {e}"), 0,
                           time.perf_counter() - start)
    verdict = entry_verdict(entry, registry)
    certified = certify(entry) if certify_entries and verdict.ok else None
    return EntryResult(id, entry.calculus, verdict, len(entry.proof), time.perf_counter() - start, certified)


def run_corpus(registry: CorpusRegistry | None = None, pattern: str = "*", workers: int = 1,
               progress: bool = False, certify_entries: bool = False) -> list[EntryResult]:
    """
    Checks every entry whose id matches pattern. Entries of one citation generation
    are checked in parallel; results come back sorted by id.

    Raises:
        CyclicLemmaDependency
    """
    registry = registry or CorpusRegistry()
    layers = registry.layers(pattern)
    total = sum(len(layer) for layer in layers)
    results: list[EntryResult] = []
    with tqdm(total=total, desc="corpus", unit="entry", disable=not progress) as bar:
        for layer in layers:
            if workers > 1:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    found = list(pool.map(lambda i: check_entry(registry, i, certify_entries), layer))
            else:
                found = [check_entry(registry, i, certify_entries) for i in layer]
            for result in found:
                if not result.ok:
                    logger.info("%s rejected at line %d: %s", result.id, result.verdict.line,
                                result.verdict.reason)
                bar.update(1)
            results.extend(found)
    accepted = sum(r.ok for r in results)
    logger.info("corpus: %d of %d entries accepted", accepted, len(results))
    return sorted(results, key=lambda r: r.id)


# -----------------------------
# Semantic certification
# -----------------------------

_CERTIFIABLE = {"QHC", "QH", "QC"}


def certify(entry: CorpusEntry) -> dict | None:
    """
    Both semantic images of a propositional entry in QHC, QH or QC: the box image
    must be an S4 consequence, the negneg image an IPC consequence. None when the
    entry is out of reach (quantifiers, extensions).
    """
    from semantics.refuter import entails_ipc, entails_s4
    from translate.translate import box_translate, negneg_translate

    if entry.calculus not in _CERTIFIABLE or not entry.is_propositional():
        return None
    premises = entry.hypotheses
    return {
        "box": entails_s4([box_translate(h) for h in premises], box_translate(entry.goal)),
        "negneg": entails_ipc([negneg_translate(h) for h in premises], negneg_translate(entry.goal)),
    }
