# tests/test_parser.py

import pytest
from hypothesis import given, settings

from corpus import SIG
from logic.errors import ArityMismatch, ParseError, SortClash, UndeclaredAtom
from logic.formula import (
    And, Atom, Box, FalseC, FalseI, Imp, Nabla, Oc, Or, Signature, Sort, Wn, iff, neg, top,
)
from logic.parser import parse_document, parse_formula, parse_sequent, parse_signature
from logic.printer import format_formula, format_sequent
from strategies import any_sort, formulas

QS4_SIG = Signature.of(propositions=["p", "q", "s"])
QH4_SIG = Signature.of(problems=["a", "b", "c"])

a, b, c = (Atom(n, (), Sort.PROBLEM) for n in "abc")
p, q = Atom("p"), Atom("q")


def test_galois_unit(parse):
    assert parse("p -> ?!p") == Imp(p, Wn(Oc(p)))


def test_implication_associates_to_the_right(parse):
    assert parse("a -> b -> c") == Imp(a, Imp(b, c))


def test_precedence_of_binary_connectives(parse):
    assert parse("a & b | c") == Or(And(a, b), c)
    assert parse("a | b -> c") == Imp(Or(a, b), c)
    assert parse("a -> b <-> c") == iff(Imp(a, b), c)


def test_prefix_operators_bind_tightest(parse):
    assert parse("~a & b") == And(neg(a), b)
    assert parse("?a | p") == Or(Wn(a), p)
    assert parse("!p -> a") == Imp(Oc(p), a)


def test_abbreviations_expand(parse):
    assert parse("~a") == Imp(a, FalseI())
    assert parse("~p") == Imp(p, FalseC())
    assert parse("top") == top(Sort.PROBLEM)
    assert parse("1") == top(Sort.PROPOSITION)
    assert parse("a <-> b") == And(Imp(a, b), Imp(b, a))


def test_modal_primitives(parse):
    assert parse("box p") == Box(p)
    assert parse("nabla a") == Nabla(a)
    assert parse("dia p") == neg(Box(neg(p)))


def test_comments_are_ignored(parse):
    assert parse("a -> a  # identity") == Imp(a, a)


def test_biconditional_does_not_associate(parse):
    with pytest.raises(ParseError):
        parse("a <-> b <-> c")


def test_syntax_errors(parse):
    for text in ("a ->", "(a", "a b", "forall . a"):
        with pytest.raises(ParseError):
            parse(text)


def test_ill_typed_input(parse):
    with pytest.raises(SortClash):
        parse("?p")
    with pytest.raises(SortClash):
        parse("!a")
    with pytest.raises(SortClash):
        parse("a & p")
    with pytest.raises(UndeclaredAtom):
        parse("z -> z")
    with pytest.raises(ArityMismatch):
        parse("pi(x, y)")
    with pytest.raises(ArityMismatch):
        parse("pi")


def test_sequents(sig):
    hypotheses, goal = parse_sequent("a; b |- a & b", sig)
    assert hypotheses == (a, b)
    assert goal == And(a, b)
    assert parse_sequent("a -> a", sig) == ((), Imp(a, a))
    assert parse_sequent("|- a -> a", sig) == ((), Imp(a, a))


def test_signatures():
    sig = parse_signature("prob a, pi(1).  prop p, r(2).")
    assert [str(d) for d in sig] == ["a", "pi(1)", "p", "r(2)"]
    assert sig.lookup("r").sort is Sort.PROPOSITION
    assert parse_signature(sig.to_text()) == sig


def test_signature_errors():
    with pytest.raises(ParseError):
        parse_signature("prob a. prop a.")
    with pytest.raises(ParseError):
        parse_signature("prob by.")
    with pytest.raises(ParseError):
        parse_signature("prob a")


def test_document_preamble_extends_the_signature(sig):
    full, found = parse_document("prob e. a & e; ?e", sig)
    assert "e" in full and "e" not in sig
    assert found == [And(a, Atom("e", (), Sort.PROBLEM)), Wn(Atom("e", (), Sort.PROBLEM))]


def test_sequent_printing(sig):
    hypotheses, goal = parse_sequent("?a -> p |- a -> !p", sig)
    assert format_sequent(hypotheses, goal) == "?a -> p |- a -> !p"


@pytest.mark.parametrize("text", [
    "p -> ?!p",
    "a -> b -> c",
    "(a -> b) -> c",
    "a & b | c",
    "a & (b | c)",
    "~~a -> a",
    "~(a -> b)",
    "!?a <-> ~~a",
    "(a <-> b) <-> c",
    "forall x. (pi(x) -> !?pi(x))",
    "forall x. ?pi(x) -> ?pi(y)",
    "exists x. ?pi(x) -> ?exists x. pi(x)",
    "~?!~?(a | ~a)",
    "top & ~top",
    "1 | 0",
])
def test_canonical_text_is_a_fixed_point(parse, text):
    assert format_formula(parse(text)) == text


def test_fold_and_expand_modes(parse):
    assert format_formula(parse("?!p -> p"), "fold") == "box p -> p"
    assert format_formula(parse("a -> !?a"), "fold") == "a -> nabla a"
    assert format_formula(parse("~?!~p"), "fold") == "dia p"
    assert format_formula(parse("box p"), "expand") == "?!p"
    assert format_formula(parse("nabla a"), "expand") == "!?a"
    with pytest.raises(ValueError):
        format_formula(parse("p"), "shout")


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(any_sort(SIG, depth=4, quantifiers=True))
def test_parse_inverts_print(f):
    assert parse_formula(format_formula(f), SIG) == f


@settings(max_examples=200)
@given(formulas(QS4_SIG, Sort.PROPOSITION, depth=4, language="QS4"))
def test_parse_inverts_print_on_box_formulas(f):
    assert parse_formula(format_formula(f), QS4_SIG) == f


@settings(max_examples=200)
@given(formulas(QH4_SIG, Sort.PROBLEM, depth=4, language="QH4"))
def test_parse_inverts_print_on_nabla_formulas(f):
    assert parse_formula(format_formula(f), QH4_SIG) == f
