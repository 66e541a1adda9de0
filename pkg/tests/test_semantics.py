# tests/test_semantics.py

import itertools

import pytest
from hypothesis import given, settings

from calculi.calculi import builtin
from logic.errors import NonPropositionalInput, SortClash, UnknownAtom
from logic.formula import Atom, Box, Imp, Signature, Sort
from logic.printer import format_formula
from logic.schema import instantiate
from semantics import (
    Countermodel, Invalid, KripkeModel, Refutation, Unknown, Valid, all_channels, decide_ipc,
    decide_s4, entails_ipc, entails_s4, filtrate, find_countermodel, generated_submodel,
    minimise_countermodel, model_check, preorders, refute_qhc, valid_s4, valid_up_to,
)
from strategies import all_formulas, formulas
from translate import box_translate, negneg_translate

MODAL = Signature.of(propositions=["p", "q"])

p = Atom("p")


def chain(n, holds):
    """0 -> 1 -> ... -> n-1 with p true at `holds`."""
    return KripkeModel.closure(range(n), [(i, i + 1) for i in range(n - 1)], {"p": holds})


# ---- models ----

def test_models_must_be_preorders():
    with pytest.raises(ValueError):
        KripkeModel((0, 1), frozenset({(0, 0), (0, 1)}), {})
    with pytest.raises(ValueError):
        KripkeModel((0, 1, 2), frozenset({(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)}), {})
    with pytest.raises(ValueError):
        KripkeModel((0,), frozenset({(0, 0)}), {"p": {3}})


def test_closure_adds_reflexive_and_transitive_edges():
    model = chain(3, set())
    assert model.successors(0) == {0, 1, 2}
    assert model.successors(2) == {2}


def test_json_form_round_trips():
    model = chain(3, {1, 2})
    assert KripkeModel.from_json(model.to_json()) == model
    assert model.to_json()["valuation"] == {"p": [1, 2]}


def test_model_check():
    model = chain(3, {1, 2})
    assert model_check(model, p) == {1, 2}
    assert model_check(model, Box(p)) == {1, 2}
    assert model_check(model, Imp(p, Box(p))) == {0, 1, 2}
    with pytest.raises(UnknownAtom):
        model_check(model, Atom("q"))


def test_model_check_refuses_other_languages(parse):
    model = chain(1, {0})
    with pytest.raises(SortClash):
        model_check(model, parse("?a"))
    with pytest.raises(NonPropositionalInput):
        model_check(model, parse("r(x)"))


# ---- tableau ----

@pytest.mark.parametrize("text", ["box p -> p", "box p -> box box p", "box (p -> q) -> (box p -> box q)",
                                  "p | ~p", "box p | ~box p", "dia box dia box p -> dia box p"])
def test_s4_theorems(parse, text):
    assert isinstance(decide_s4(parse(text)), Valid)


@pytest.mark.parametrize("text", ["p -> box p", "dia p -> box dia p", "box (p | q) -> box p | box q",
                                  "dia box p -> box dia p", "0"])
def test_s4_non_theorems_come_with_a_verified_countermodel(parse, text):
    f = parse(text)
    verdict = decide_s4(f)
    assert isinstance(verdict, Countermodel)
    assert verdict.world not in model_check(verdict.model, f)
    assert len(verdict.model) <= 3


def test_decide_s4_refuses_other_languages(parse):
    with pytest.raises(SortClash):
        decide_s4(parse("a"))
    with pytest.raises(NonPropositionalInput):
        decide_s4(parse("forall x. r(x)"))


# ---- oracle ----

def test_preorder_counts():
    assert [len(preorders(n)) for n in (1, 2, 3)] == [1, 4, 29]


def test_oracle_finds_the_smallest_countermodel(parse):
    model, world = find_countermodel(parse("p -> box p"))
    assert len(model) == 2
    assert world not in model_check(model, parse("p -> box p"))
    assert find_countermodel(parse("box p -> p")) is None


def agrees_with_the_oracle(f):
    verdict = decide_s4(f)
    if isinstance(verdict, Valid):
        return valid_up_to(f, 3)
    if verdict.world in model_check(verdict.model, f):
        return False
    return len(verdict.model) > 3 or not valid_up_to(f, 3)


@settings(max_examples=100, deadline=None)
@given(formulas(MODAL, Sort.PROPOSITION, depth=3, language="QS4"))
def test_tableau_agrees_with_the_oracle(f):
    assert agrees_with_the_oracle(f)


@pytest.mark.slow
def test_tableau_agrees_with_the_oracle_on_every_small_formula():
    # two atoms, connective depth 2 (so modal depth at most 2): 3303 formulas
    space = all_formulas(MODAL, Sort.PROPOSITION, depth=2, language="QS4")
    assert len(space) == 3303
    disagreements = [f for f in space if not agrees_with_the_oracle(f)]
    assert disagreements == []


# ---- minimisation ----

def test_generated_submodel_keeps_what_is_reachable():
    model, world = generated_submodel(chain(4, {0, 1}), 2)
    assert world == 0
    assert len(model) == 2
    assert model.valuation["p"] == frozenset()


def test_filtration_preserves_the_refutation():
    f = Imp(p, Box(p))
    model, world = filtrate(chain(4, {0, 1}), 0, f)
    assert len(model) == 2
    assert world not in model_check(model, f)


def test_minimised_countermodels_still_refute():
    f = Imp(p, Box(p))
    model, world = minimise_countermodel(chain(5, {0, 1, 2}), 0, f)
    assert len(model) == 2
    assert world not in model_check(model, f)


# ---- IPC ----

@pytest.mark.parametrize("text", ["a -> a", "a & b -> b & a", "~~~a -> ~a", "(a -> b) -> (~b -> ~a)",
                                  "~~(a | ~a)", "bot -> a"])
def test_ipc_theorems(parse, text):
    assert isinstance(decide_ipc(parse(text)), Valid)


@pytest.mark.parametrize("text", ["a | ~a", "~~a -> a", "((a -> b) -> a) -> a", "~a | ~~a",
                                  "(a -> b | c) -> (a -> b) | (a -> c)"])
def test_ipc_non_theorems(parse, text):
    verdict = decide_ipc(parse(text))
    assert isinstance(verdict, Invalid)
    assert verdict.world not in model_check(verdict.countermodel, verdict.translated)


def test_decide_ipc_refuses_other_languages(parse):
    with pytest.raises(SortClash):
        decide_ipc(parse("p -> p"))
    with pytest.raises(SortClash):
        decide_ipc(parse("!?a -> a"))
    with pytest.raises(NonPropositionalInput):
        decide_ipc(parse("pi(x)"))


def test_consequence(parse):
    assert entails_ipc([parse("a"), parse("a -> b")], parse("b"))
    assert not entails_ipc([parse("a | b")], parse("a"))
    assert entails_s4([parse("p")], parse("box p"))
    assert not entails_s4([], parse("p -> box p"))


# ---- refuter ----

@pytest.mark.parametrize("text, channel", [
    ("p -> ?!p", "Box"),
    ("!?a -> a", "NegNeg"),
    ("!(p | q) -> !p | !q", "Box"),
    ("a | ~a", "Box"),
])
def test_refutations(parse, text, channel):
    found = refute_qhc(parse(text))
    assert isinstance(found, Refutation)
    assert found.channel == channel
    assert len(found.countermodel) <= 3
    assert found.world not in model_check(found.countermodel, found.modal_image)
    assert found.to_dict()["status"] == "refuted"


def test_the_negneg_channel_reports_the_intuitionistic_image(parse):
    found = refute_qhc(parse("!?a -> a"))
    assert found.translated == negneg_translate(parse("!?a -> a"))
    assert found.modal_image == box_translate(found.translated)
    assert found.to_dict()["modal_image"] == format_formula(found.modal_image)


def test_both_channels_refute_the_disjunction_property_of_the_bang(parse):
    # Box is tried first; NegNeg refutes it as well
    channels = [r.channel for r in all_channels(parse("!(p | q) -> !p | !q"))]
    assert channels == ["Box", "NegNeg"]


def test_theorems_are_never_refuted(parse):
    for text in ("?!p -> p", "a -> !?a", "!(p -> q) -> (!p -> !q)", "~!0"):
        assert isinstance(refute_qhc(parse(text)), Unknown)
    assert Unknown().to_dict() == {"status": "unknown"}


def test_all_channels(parse):
    assert [r.channel for r in all_channels(parse("a | ~a"))] == ["Box", "NegNeg"]
    assert [r.channel for r in all_channels(parse("!?a -> a"))] == ["NegNeg"]
    with pytest.raises(NonPropositionalInput):
        refute_qhc(parse("exists x. r(x)"))


# ---- soundness of the two-sorted axioms ----

_CANDIDATES = {
    Sort.PROBLEM: ("a", "!p", "a -> b"),
    Sort.PROPOSITION: ("p", "?a", "p | q"),
}
_QUANTIFIER_AXIOMS = {"all_e", "ex_i", "all_i", "ex_e"}


def _instances(schema, parse):
    metas = schema.metavariables
    for choice in itertools.product(*(_CANDIDATES[m.sort] for m in metas)):
        yield instantiate(schema, {m.name: parse(text) for m, text in zip(metas, choice)})


@pytest.mark.parametrize("name", sorted(set(builtin("QHC").axioms) - _QUANTIFIER_AXIOMS))
def test_axiom_instances_have_valid_images(parse, name):
    for schema in builtin("QHC").axioms[name]:
        for instance in _instances(schema, parse):
            assert valid_s4(box_translate(instance)), instance
            assert isinstance(decide_ipc(negneg_translate(instance)), Valid), instance


def test_rules_preserve_validity_of_images(parse):
    p, oc_p = parse("p"), parse("!p")
    a, wn_a = parse("a"), parse("?a")
    assert entails_s4([box_translate(p)], box_translate(oc_p))
    assert entails_ipc([negneg_translate(p)], negneg_translate(oc_p))
    assert entails_s4([box_translate(a)], box_translate(wn_a))
    assert entails_ipc([negneg_translate(a)], negneg_translate(wn_a))
