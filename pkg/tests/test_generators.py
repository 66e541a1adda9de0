# tests/test_generators.py

import pytest

from calculi.calculi import builtin
from kernel import Axiom, TheoremGenerator, check
from logic.formula import Box, Nabla, Oc, Signature, Sort, Wn, subformulas, typecheck
from logic.generator import LANGUAGES, FormulaGenerator
from semantics import Unknown, refute_qhc


def test_formula_generator_is_seeded(sig):
    first = FormulaGenerator(sig, seed=7).sample(20, depth=4)
    second = FormulaGenerator(sig, seed=7).sample(20, depth=4)
    assert first == second


@pytest.mark.parametrize("language", sorted(LANGUAGES))
def test_generated_formulas_stay_in_their_language(sig, language):
    generator = FormulaGenerator(sig, language=language, seed=1, quantifiers=True)
    calculus = builtin(language)
    for f in generator.sample(100, depth=4):
        assert typecheck(f, sig) is f.sort
        assert calculus.admits(f)


def test_single_sorted_languages_draw_one_sort(sig):
    assert {f.sort for f in FormulaGenerator(sig, "QS4", seed=2).sample(50, 3)} == {Sort.PROPOSITION}
    assert {f.sort for f in FormulaGenerator(sig, "QH", seed=2).sample(50, 3)} == {Sort.PROBLEM}


def test_formula_generator_uses_the_modalities_it_is_given(sig):
    seen = set()
    for f in FormulaGenerator(sig, seed=3, leaf_bias=0.0).sample(50, depth=3):
        seen |= {type(g) for g in subformulas(f)}
    assert {Wn, Oc} <= seen
    assert not {Box, Nabla} & seen


def test_unknown_language():
    with pytest.raises(ValueError):
        FormulaGenerator(Signature(), language="QK")


@pytest.mark.parametrize("calculus", ["QHC", "QH", "QC"])
def test_generated_theorems_are_accepted(sig, calculus):
    generator = TheoremGenerator(sig, calculus, seed=11)
    proofs = generator.theorems(20)
    assert len(proofs) == 20
    for proof in proofs:
        assert proof.calculus == calculus
        assert check(proof).ok


def test_generated_theorems_prefer_derived_lines(sig):
    proofs = TheoremGenerator(sig, seed=5).theorems(10)
    assert all(not isinstance(p.lines[-1].justification, Axiom) for p in proofs)


def test_generated_theorems_are_never_refuted(sig):
    for proof in TheoremGenerator(sig, seed=0).theorems(50):
        assert check(proof).ok
        assert isinstance(refute_qhc(proof.goal), Unknown)


@pytest.mark.slow
def test_a_thousand_generated_theorems_survive_the_refuter(sig):
    for proof in TheoremGenerator(sig, seed=20240917).theorems(1000):
        assert check(proof).ok
        assert isinstance(refute_qhc(proof.goal), Unknown)
