# tests/test_translate.py

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logic.errors import SortClash
from logic.formula import (
    Atom, Box, FalseC, FalseI, Imp, Nabla, Or, Signature, Sort, box, diamond, iff, nabla, neg, retype,
)
from semantics import Valid, decide_ipc, valid_s4
from strategies import all_formulas, formulas
from translate import (
    TRANSLATIONS, box_translate, diamond_translate, embed_qh4, embed_qs4, get_translation,
    kuroda_translate, nabla_translate, negneg_translate, subst_nabla_negneg, unembed_qh4,
    unembed_qs4,
)

CLASSICAL = Signature.of(propositions=["p", "q"])
INTUITIONISTIC = Signature.of(problems=["a", "b"])
MODAL = Signature.of(propositions=["p", "q", "s"])

a_prop, b_prop = Atom("a"), Atom("b")
p_prob, q_prob = Atom("p", (), Sort.PROBLEM), Atom("q", (), Sort.PROBLEM)


def nn(f):
    return neg(neg(f))


# ---- fixed images ----

def test_box_image_of_intuitionistic_connectives(parse):
    assert box_translate(parse("a -> b")) == Box(Imp(Box(a_prop), Box(b_prop)))
    assert box_translate(parse("a | b")) == Or(Box(a_prop), Box(b_prop))
    assert box_translate(FalseI()) == FalseC()


def test_box_image_erases_wn_and_boxes_oc(parse):
    assert box_translate(parse("?a -> p")) == Imp(Box(a_prop), Atom("p"))
    assert box_translate(parse("!p")) == Box(Atom("p"))
    assert box_translate(parse("!?a")) == Box(Box(a_prop))


def test_prefix_all_boxes_every_problem_connective(parse):
    assert box_translate(parse("a | b"), prefix_all=True) == Box(Or(Box(a_prop), Box(b_prop)))


def test_negneg_image(parse):
    assert negneg_translate(parse("p | q")) == nn(Or(nn(p_prob), nn(q_prob)))
    assert negneg_translate(parse("?a")) == nn(Atom("a", (), Sort.PROBLEM))
    assert negneg_translate(parse("!p")) == nn(p_prob)
    assert negneg_translate(FalseC()) == FalseI()


def test_kuroda_image_negates_once_at_the_top(parse):
    assert kuroda_translate(parse("p | q")) == nn(Or(p_prob, q_prob))


def test_nabla_image(parse):
    a, b = (Atom(n, (), Sort.PROBLEM) for n in "ab")
    assert nabla_translate(parse("a | b")) == nabla(Or(nabla(a), nabla(b)))
    assert nabla_translate(parse("a -> b"), primitive=True) == Imp(Nabla(a), Nabla(b))
    assert nabla_translate(parse("p")) == Atom("p")


def test_diamond_image(parse):
    p = Atom("p")
    assert diamond_translate(parse("p")) == box(diamond(box(p)))
    assert diamond_translate(parse("p -> p")) == box(Imp(box(diamond(box(p))), box(diamond(box(p)))))


def test_unembedding_rejects_a_lone_modality(parse):
    with pytest.raises(SortClash):
        unembed_qs4(parse("?a"))
    with pytest.raises(SortClash):
        unembed_qh4(parse("!p"))
    assert unembed_qs4(parse("?!p -> p")) == Imp(Box(Atom("p")), Atom("p"))


def test_translation_registry():
    assert set(TRANSLATIONS) == {"box", "negneg", "nabla", "diamond", "embed_qs4", "embed_qh4"}
    assert get_translation("Box").name == "Box"
    assert get_translation("NEGNEG").target == "QH"
    with pytest.raises(KeyError):
        get_translation("godel")


# ---- laws of the translations ----

def classical_diagram(f):
    return subst_nabla_negneg(nabla_translate(retype(f, Sort.PROBLEM), primitive=True)), negneg_translate(f)


def intuitionistic_diagram(g):
    return subst_nabla_negneg(nabla_translate(g, primitive=True)), negneg_translate(retype(g, Sort.PROPOSITION))


def ipc_equivalent(left, right):
    return isinstance(decide_ipc(iff(left, right)), Valid)


@settings(max_examples=200)
@given(formulas(CLASSICAL, Sort.PROPOSITION, depth=4, language="QC"))
def test_nabla_then_negneg_agrees_with_negneg_on_classical_formulas(f):
    via_nabla, direct = classical_diagram(f)
    assert via_nabla == direct


@settings(max_examples=200)
@given(formulas(INTUITIONISTIC, Sort.PROBLEM, depth=4, language="QH"))
def test_nabla_then_negneg_agrees_with_negneg_on_intuitionistic_formulas(g):
    via_nabla, direct = intuitionistic_diagram(g)
    assert via_nabla == direct


@settings(max_examples=200, deadline=None)
@given(st.one_of(formulas(CLASSICAL, Sort.PROPOSITION, depth=3, language="QC").map(classical_diagram),
                 formulas(INTUITIONISTIC, Sort.PROBLEM, depth=3, language="QH").map(intuitionistic_diagram)))
def test_both_diagram_paths_are_ipc_equivalent(paths):
    assert ipc_equivalent(*paths)


@pytest.mark.slow
@pytest.mark.parametrize("sig, sort, language, diagram", [
    (CLASSICAL, Sort.PROPOSITION, "QC", classical_diagram),
    (INTUITIONISTIC, Sort.PROBLEM, "QH", intuitionistic_diagram),
], ids=["classical", "intuitionistic"])
def test_both_diagram_paths_are_ipc_equivalent_on_every_small_formula(sig, sort, language, diagram):
    # two atoms, connective depth 2: 2703 formulas per language
    space = all_formulas(sig, sort, depth=2, language=language)
    assert len(space) == 2703
    assert [f for f in space if not ipc_equivalent(*diagram(f))] == []


@settings(max_examples=60, deadline=None)
@given(formulas(CLASSICAL, Sort.PROPOSITION, depth=2, language="QC"))
def test_kuroda_and_negneg_images_are_equivalent(f):
    assert isinstance(decide_ipc(iff(kuroda_translate(f), negneg_translate(f))), Valid)


@settings(max_examples=60, deadline=None)
@given(formulas(INTUITIONISTIC, Sort.PROBLEM, depth=3, language="QH"))
def test_the_two_box_images_are_equivalent(g):
    assert valid_s4(iff(box_translate(g, prefix_all=True), box_translate(g)))


@settings(max_examples=1000, deadline=None)
@given(formulas(MODAL, Sort.PROPOSITION, depth=4, language="QS4"))
def test_box_image_inverts_the_box_embedding(f):
    assert box_translate(embed_qs4(f)) == f
    assert unembed_qs4(embed_qs4(f)) == f


@settings(max_examples=200)
@given(formulas(INTUITIONISTIC, Sort.PROBLEM, depth=4, language="QH4"))
def test_nabla_embedding_folds_back(g):
    assert unembed_qh4(embed_qh4(g)) == g
