from .kernel import (
    Axiom, Hypothesis, ModusPonens, Generalization, Rule, Lemma, Line, Proof,
    Accepted, Rejected, check, check_derived_rule, entry_verdict, axiom_footprint, lemma_footprint,
    minimal_axiom_set,
)
from .builder import ProofBuilder, inline_lemmas
from .script import parse_script, write_script
from .generator import TheoremGenerator
