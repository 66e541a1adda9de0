# tests/strategies.py

"""hypothesis strategies for well-typed formulas, one per target language, and exhaustive enumeration of small ones."""

from hypothesis import strategies as st

from logic.formula import (
    And, Atom, Exists, Forall, Imp, Or, Signature, Sort, falsum,
)
from logic.generator import LANGUAGES

VARIABLES = ("x", "y")


def leaves(sig: Signature, sort: Sort, quantifiers: bool = False):
    options = [st.just(falsum(sort))]
    for decl in sig.of_sort(sort):
        if decl.arity == 0:
            options.append(st.just(Atom(decl.name, (), sort)))
        elif quantifiers:
            args = st.tuples(*[st.sampled_from(VARIABLES)] * decl.arity)
            options.append(args.map(lambda a, name=decl.name: Atom(name, a, sort)))
    return st.one_of(options)


def formulas(sig: Signature, sort: Sort, depth: int = 3, language: str = "QHC", quantifiers: bool = False):
    """Formulas of the given sort with connective depth at most depth."""
    leaf = leaves(sig, sort, quantifiers)
    if depth <= 0:
        return leaf
    sub = formulas(sig, sort, depth - 1, language, quantifiers)
    options = [leaf, st.builds(And, sub, sub), st.builds(Or, sub, sub), st.builds(Imp, sub, sub)]
    for node, operand in LANGUAGES[language][sort]:
        options.append(st.builds(node, formulas(sig, operand, depth - 1, language, quantifiers)))
    if quantifiers:
        options += [st.builds(Forall, st.sampled_from(VARIABLES), sub),
                    st.builds(Exists, st.sampled_from(VARIABLES), sub)]
    return st.one_of(options)


def any_sort(sig: Signature, depth: int = 3, language: str = "QHC", quantifiers: bool = False):
    return st.one_of(formulas(sig, Sort.PROBLEM, depth, language, quantifiers),
                     formulas(sig, Sort.PROPOSITION, depth, language, quantifiers))


def all_formulas(sig: Signature, sort: Sort, depth: int, language: str = "QHC") -> list:
    """Every formula of the given sort with connective depth at most depth, without quantifiers."""
    found = [falsum(sort)] + [Atom(d.name, (), sort) for d in sig.of_sort(sort) if d.arity == 0]
    if depth <= 0:
        return found
    sub = all_formulas(sig, sort, depth - 1, language)
    for node in (And, Or, Imp):
        found += [node(left, right) for left in sub for right in sub]
    for node, operand in LANGUAGES[language][sort]:
        found += [node(body) for body in all_formulas(sig, operand, depth - 1, language)]
    return found
