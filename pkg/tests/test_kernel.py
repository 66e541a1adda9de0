# tests/test_kernel.py

from dataclasses import dataclass

import pytest

from kernel import (
    Axiom, Hypothesis, Lemma, Line, ModusPonens, Proof, ProofBuilder, Rejected, axiom_footprint, check,
    check_derived_rule, entry_verdict, parse_script, write_script,
)
from kernel.script import format_justification
from logic.errors import DeductionError, ScriptError


def script(project_root, name):
    return (project_root / "proofs" / f"{name}.qp").read_text()


# ---- scripts ----

@pytest.mark.parametrize("name", ["galois_fwd", "identity", "oc_reverse"])
def test_shipped_scripts_are_accepted(project_root, name):
    verdict = check(parse_script(script(project_root, name)))
    assert verdict.ok, verdict


def test_a_script_may_cite_a_corpus_entry(project_root, registry):
    proof = parse_script(script(project_root, "lemma_citation"), registry=registry)
    assert check(proof, registry).ok
    assert "rule:wn_top" in axiom_footprint(proof, registry)


def test_the_corrupted_script_fails_at_the_bad_axiom(project_root):
    verdict = check(parse_script(script(project_root, "corrupted")))
    assert isinstance(verdict, Rejected)
    assert verdict.line == 3
    assert verdict.to_dict()["failing_line"] == 3


def test_footprint_of_one_half_of_the_adjunction(project_root):
    verdict = check(parse_script(script(project_root, "galois_fwd")))
    assert verdict.footprint == {"axiom:oc_imp", "axiom:oc_wn", "axiom:K", "axiom:S", "rule:oc_top"}


def test_modus_ponens_takes_its_lines_in_either_order(project_root):
    text = script(project_root, "identity").replace("by mp 3 4", "by mp 4 3")
    assert check(parse_script(text)).ok


def test_forward_references_are_rejected(project_root):
    text = script(project_root, "identity").replace("by mp 2 1", "by mp 2 4")
    verdict = check(parse_script(text))
    assert verdict == Rejected(3, "line 4 is not earlier than line 3")


def test_a_lemma_from_a_stronger_calculus_is_refused(registry):
    text = "calculus QC\nprop p.\n1. p -> p by lemma ipc.id [a:=p]\n"
    verdict = check(parse_script(text, registry=registry), registry)
    assert verdict.line == 1
    assert "does not include" in verdict.reason


def test_a_lemma_may_be_instantiated_across_sorts(registry):
    text = "calculus QHC\nprop p.\ngoal !p -> !p\n1. !p -> !p by lemma ipc.id [a:=!p]\n"
    assert check(parse_script(text, registry=registry), registry).ok


def test_minimal_mode_refuses_extension_axioms():
    text = "calculus QHC+KSP\nprop p.\n1. ~!~p -> !p by axiom KSP [P:=p]\n"
    proof = parse_script(text)
    assert check(proof).ok
    verdict = check(proof, minimal=True)
    assert verdict.line == 1
    assert "outside the permitted axiom set" in verdict.reason


# ---- citations of other entries ----

@dataclass(frozen=True)
class Entry:
    id: str
    calculus: str
    hypotheses: tuple
    goal: object
    proof: Proof


class Entries:
    """A lemma source over hand-written proofs."""

    def __init__(self, *entries):
        self.entries = {e.id: e for e in entries}

    def lemma(self, id):
        return self.entries[id]


def one_line_entry(sig, id, formula, justification):
    proof = Proof("QC", sig, (), (Line(formula, justification),), formula)
    return Entry(id, "QC", (), formula, proof)


def test_citing_a_rejected_entry_is_rejected(sig, parse):
    p = parse("p")
    source = Entries(one_line_entry(sig, "bogus", p, Axiom("K")),
                     one_line_entry(sig, "user", p, Lemma("bogus")))
    assert isinstance(check(source.lemma("bogus").proof, source), Rejected)
    verdict = check(source.lemma("user").proof, source)
    assert isinstance(verdict, Rejected)
    assert verdict.line == 1
    assert "lemma 'bogus' is not proved" in verdict.reason
    assert not entry_verdict(source.lemma("user"), source).ok


def test_circular_citations_are_rejected(sig, parse):
    source = Entries(one_line_entry(sig, "loop", parse("p"), Lemma("loop")))
    verdict = check(source.lemma("loop").proof, source)
    assert isinstance(verdict, Rejected)
    assert verdict.line == 1


def test_an_entry_must_prove_its_own_statement(project_root, parse):
    proof = parse_script(script(project_root, "identity"))
    claimed = Entries(Entry("ident", "QH", (), parse("b -> b"), proof))
    assert entry_verdict(claimed.lemma("ident"), claimed) == Rejected(
        0, "the proof of 'ident' does not prove its statement")
    honest = Entries(Entry("ident", "QH", (), proof.goal, proof))
    assert entry_verdict(honest.lemma("ident"), honest).ok


def test_proof_level_rejections(sig, parse):
    goal = parse("a -> a")
    assert check(Proof("QHC", sig, (), (), goal)) == Rejected(0, "the proof has no lines")
    lines = (Line(parse("a"), Hypothesis(1)),)
    assert check(Proof("QXYZ", sig, (parse("a"),), lines, parse("a"))).line == 0
    assert check(Proof("QH", sig, (parse("?a"),), lines, parse("a"))).line == 0


def test_the_last_line_must_be_the_goal(sig, parse):
    lines = (Line(parse("a"), Hypothesis(1)),)
    verdict = check(Proof("QH", sig, (parse("a"),), lines, parse("b")))
    assert verdict.line == 1
    assert "not the goal" in verdict.reason


def test_axiom_lines_must_match_their_instance(sig, parse):
    k = Axiom("K", {"A": parse("a"), "B": parse("b")})
    assert check(Proof("QH", sig, (), (Line(parse("a -> (b -> a)"), k),), parse("a -> (b -> a)"))).ok
    bad = check(Proof("QH", sig, (), (Line(parse("b -> (a -> b)"), k),), parse("b -> (a -> b)")))
    assert bad.line == 1
    assert check(Proof("QH", sig, (), (Line(parse("a"), Axiom("wn_oc")),), parse("a"))).line == 1


def test_unknown_hypothesis_index(sig, parse):
    lines = (Line(parse("a"), Hypothesis(2)),)
    assert check(Proof("QH", sig, (parse("a"),), lines, parse("a"))).line == 1


def test_write_then_read_gives_the_same_proof(project_root):
    proof = parse_script(script(project_root, "galois_fwd"))
    text = write_script(proof, ["one half of the adjunction"])
    assert text.startswith("# one half of the adjunction\ncalculus QHC\n")
    assert " 1. ?a -> p by hyp 1" in text
    assert parse_script(text) == proof


def test_format_justification():
    assert format_justification(ModusPonens(3, 4)) == "mp 3 4"
    assert format_justification(Hypothesis(1)) == "hyp 1"


@pytest.mark.parametrize("text, lineno", [
    ("calculus QH\nprob a.\n2. a by hyp 1\n", 3),
    ("calculus QH\nprob a.\n1. b by hyp 1\n", 3),
    ("calculus QH\nprob a.\n1. a by magic 1\n", 3),
    ("calculus QH\nprob a.\n1. a by hyp 1 by hyp 1\n", 3),
    ("calculus QH\nprob a.\nhyp a\n1. a by mp 1\n", 4),
    ("calculus QH\nprob a.\nwhat is this\n", 3),
])
def test_script_errors_carry_the_line_number(text, lineno):
    with pytest.raises(ScriptError) as info:
        parse_script(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}: ")


def test_a_script_needs_a_header_and_lines():
    with pytest.raises(ScriptError):
        parse_script("prob a.\n1. a by hyp 1\n")
    with pytest.raises(ScriptError):
        parse_script("calculus QH\nprob a.\n")


# ---- builder ----

def test_builder_identity(sig, parse):
    b = ProofBuilder("QH", sig)
    b.identity("a")
    proof = b.build()
    assert proof.goal == parse("a -> a")
    assert len(proof) == 5
    assert check(proof).ok


def test_builder_discharges_assumptions(sig, parse):
    b = ProofBuilder("QH", sig)
    x = b.assume("a")
    y = b.assume("b")
    result = b.discharge(x, b.discharge(y, x))
    proof = b.build(result)
    assert proof.goal == parse("a -> (b -> a)")
    assert check(proof).ok


def test_builder_writes_the_adjunction(sig, parse):
    b = ProofBuilder("QHC", sig, hypotheses=("?a -> p",))
    b.syl(b.axiom("oc_wn", A="a"), b.monotone_oc(b.hyp(1)))
    proof = b.build()
    assert proof.goal == parse("a -> !p")
    assert check(proof).ok
    assert check_derived_rule([parse("?a -> p")], parse("a -> !p"), proof).ok
    assert check_derived_rule([parse("a -> !p")], parse("a -> !p"), proof).line == 0


def test_builder_quantifier_steps(sig, parse):
    b = ProofBuilder("QH", sig)
    b.all_map(b.identity("pi(x)"), "x")
    proof = b.build()
    assert proof.goal == parse("forall x. pi(x) -> forall x. pi(x)")
    assert check(proof).ok


def test_builder_infers_bindings_from_a_target(sig, parse):
    b = ProofBuilder("QHC", sig)
    ref = b.axiom("wn_oc", target="?!(p | q) -> p | q")
    assert b.f(ref) == parse("?!(p | q) -> p | q")
    with pytest.raises(DeductionError):
        b.axiom("wn_oc", target="p -> ?!p")


def test_builder_refuses_unsound_generalization(sig):
    b = ProofBuilder("QH", sig, hypotheses=("pi(x)",))
    with pytest.raises(DeductionError):
        b.gen(b.hyp(1), "x")
    b = ProofBuilder("QH", sig)
    h = b.assume("pi(x)")
    with pytest.raises(DeductionError):
        b.gen(h, "x")


def test_builder_bookkeeping_errors(sig):
    b = ProofBuilder("QH", sig)
    x = b.assume("a")
    b.assume("b")
    with pytest.raises(DeductionError):
        b.discharge(x, x)
    with pytest.raises(DeductionError):
        b.build()
    with pytest.raises(DeductionError):
        b.have(x, "b")
    with pytest.raises(DeductionError):
        b.mp(x, x)
    with pytest.raises(DeductionError):
        ProofBuilder("QH", sig).hyp(1)
