# tests/test_calculi.py

import pytest

from calculi.calculi import (
    BUILTIN_NAMES, CALCULI, builtin, define_theory, extend, get_calculus, make_schema,
)
from corpus import THEORIES
from kernel import ProofBuilder, check
from logic.errors import (
    CaptureViolation, DeductionError, SortClash, UnboundMetavariable, UnknownCalculus,
)
from logic.formula import Sort
from logic.parser import parse_formula, parse_signature
from logic.schema import instantiate, lam, match_schema


def test_builtin_calculi_are_known():
    for name in BUILTIN_NAMES:
        assert get_calculus(name).name == name
    with pytest.raises(UnknownCalculus):
        get_calculus("QXYZ")


def test_qhc_carries_a_hilbert_base_per_sort():
    qhc = builtin("QHC")
    sorts = {schema.sort for schema in qhc.axioms["K"]}
    assert sorts == {Sort.PROBLEM, Sort.PROPOSITION}
    assert {s.sort for s in qhc.axioms["dne"]} == {Sort.PROPOSITION}
    assert {"wn_oc", "oc_wn", "oc_imp", "wn_imp", "oc_bot"} <= qhc.axiom_names()
    assert qhc.rule_names() == {"oc_top", "wn_top"}


def test_intuitionistic_base_has_no_double_negation_elimination():
    assert "dne" not in builtin("QH").axioms
    assert "dne" in builtin("QC").axioms


def test_inclusions():
    qhc = builtin("QHC")
    assert qhc.includes("QH") and qhc.includes("QC") and qhc.includes(qhc)
    assert builtin("QS4").includes("QC")
    assert builtin("QH4").includes("QH")
    assert not builtin("QH").includes("QHC")
    assert get_calculus("QHC+KSP+EDR").includes("QHC+KSP")
    assert get_calculus("QHC+KSP+EDR").includes("QH")
    assert not get_calculus("QHC+KSP").includes("QHC+HNIP")


def test_language_membership(parse):
    assert builtin("QHC").admits(parse("p -> ?!p"))
    assert not builtin("QH").admits(parse("?a"))
    assert not builtin("QHC").admits(parse("box p"))
    assert builtin("QS4").admits(parse("box p -> p"))
    assert builtin("QH4").admits(parse("nabla a -> a"))
    assert not builtin("QC").admits(parse("a"))


def test_axiom_instances(parse):
    wn_oc = builtin("QHC").axioms["wn_oc"][0]
    assert instantiate(wn_oc, {"P": parse("p & q")}) == parse("?!(p & q) -> p & q")
    with pytest.raises(SortClash):
        instantiate(wn_oc, {"P": parse("a")})
    with pytest.raises(UnboundMetavariable):
        instantiate(wn_oc, {})
    with pytest.raises(UnboundMetavariable):
        instantiate(wn_oc, {"P": parse("p"), "Q": parse("q")})


def test_quantifier_schemata_rename_terms(parse):
    all_e = builtin("QH").axioms["all_e"][0]
    instance = instantiate(all_e, {"A": lam("x", parse("pi(x)"))}, {"t": "y"})
    assert instance == parse("forall x. pi(x) -> pi(y)")


def test_quantifier_schemata_enforce_their_side_conditions(parse):
    all_i = builtin("QH").axioms["all_i"][0]
    fine = instantiate(all_i, {"A": lam("x", parse("pi(x)")), "C": parse("pi(y)")})
    assert fine == parse("forall x. (pi(y) -> pi(x)) -> (pi(y) -> forall x. pi(x))")
    with pytest.raises(CaptureViolation):
        instantiate(all_i, {"A": lam("x", parse("pi(x)")), "C": parse("pi(x)")})


def test_matching_inverts_instantiation(parse):
    s = builtin("QH").axioms["S"][0]
    target = parse("(a -> (b -> c)) -> ((a -> b) -> (a -> c))")
    binding, _ = match_schema(s, target)
    assert instantiate(s, binding) == target
    assert match_schema(s, parse("a -> a")) is None


def test_extend_leaves_the_base_untouched():
    qhc = builtin("QHC")
    ksp = make_schema("KSP2", "~!~P -> !P", "prop P.")
    bigger = extend(qhc, [ksp])
    assert bigger.name == "QHC+KSP2"
    assert "KSP2" in bigger.axioms and "KSP2" not in qhc.axioms
    assert bigger.includes(qhc)
    with pytest.raises(ValueError):
        extend(qhc, [make_schema("K", "?a -> ?a", "prob a.")])
    with pytest.raises(SortClash):
        extend(builtin("QH"), [make_schema("X", "?A", "prob A.")])


def test_theories_are_registered_once():
    for spec in THEORIES:
        calculus = get_calculus(spec["name"])
        assert CALCULI.register(define_theory(spec)) is calculus
        assert calculus.includes(spec["base"])


def test_a_different_theory_under_a_known_name_is_an_error():
    spec = {"name": "QHC+KSP", "base": "QHC", "declarations": "prop P.", "axioms": {"KSP": "!P -> ~!~P"}}
    with pytest.raises(ValueError):
        CALCULI.register(define_theory(spec))


def test_theory_rules():
    edr = get_calculus("QHC+EDR").rules["EDR"][0]
    metas = parse_signature("prob A, B.")
    assert [p.body for p in edr.premises] == [parse_formula("~(A & B)", metas)]
    assert edr.conclusion.body == parse_formula("!?(A | B) -> !?A | !?B", metas)
    assert edr.sort is Sort.PROBLEM
    assert {m.name for m in edr.metavariables} == {"A", "B"}


@pytest.mark.parametrize("calculus", ["QHC+EDR", "QHC+HNIP+EDR", "QHC+KSP+EDR"])
def test_exclusive_disjunction_rule_applies(sig, calculus):
    builder = ProofBuilder(calculus, sig, hypotheses=["~(!?a & ~!?a)"])
    ref = builder.rule("EDR", builder.hyp(1))
    assert builder.f(ref) == parse_formula("!?(!?a | ~!?a) -> !?!?a | !?~!?a", sig)
    verdict = check(builder.build(ref))
    assert verdict.ok
    assert "rule:EDR" in verdict.footprint


def test_exclusive_disjunction_rule_is_not_in_qhc(sig):
    builder = ProofBuilder("QHC", sig, hypotheses=["~(a & b)"])
    with pytest.raises(DeductionError):
        builder.rule("EDR", builder.hyp(1))


def test_describe_lists_every_schema():
    text = builtin("QHC").describe()
    assert text.startswith("QHC (two-sorted)")
    assert "axiom wn_oc" in text
    assert "rule  oc_top" in text
