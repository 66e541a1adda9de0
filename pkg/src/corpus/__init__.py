from .registry import (
    SIG, SIGNATURE_TEXT, SPECS, EntrySpec, CorpusEntry, CorpusRegistry, EntryResult,
    corpus_entry, library_lemma, check_entry, run_corpus, certify,
)
from .theories import THEORIES
from . import (
    library, galois, modalities, symmetry, negation, distributivity, gentzen, stability,
    principles,
)
