# -----------------------------
# Load Data
# -----------------------------
import logging
from pathlib import Path

from calculi.calculi import CALCULI, Calculus, define_theory
from kernel.kernel import LemmaSource, Proof
from kernel.script import parse_script
from logic.formula import Signature
from logic.parser import parse_document, parse_sequent, parse_signature
from logic.errors import ParseError
from utils.utils import Config, load_directory, load_json, read_text

logger = logging.getLogger(__name__)


class DataLoader:
    """
    Loads the inputs of a run: signature files, proof scripts, formula documents
    and theory files registering calculus extensions.

    Example usage:
    >>> loader = DataLoader(config=load_config("data/config.json"))
    >>> sig = loader.load_signature()
    >>> proof = loader.load_script("proofs/galois_fwd.qp")
    """

    def __init__(self, config: Config | None = None, signature_path: str | Path | None = None):
        self.config = config or Config()
        self.signature_path = signature_path
        self._signature: Signature | None = None

    @property
    def signature(self) -> Signature:
        """The run's signature, read once: --signature if given, else the configured default."""
        if self._signature is None:
            self._signature = self.load_signature(self.signature_path)
        return self._signature

    def load_signature(self, path: str | Path | None = None) -> Signature:
        if path is None:
            path = self.config.resolve(self.config.default_signature)
        text = read_text(path)
        try:
            sig = parse_signature(text)
        except ParseError as e:
            raise ParseError(f"{path}: {e}") from None
        logger.debug("signature %s: %d atoms", path, len(sig))
        return sig

    def load_formulas(self, text: str) -> list:
        """`[preamble] A; B; ...` against the run's signature; a preamble may declare more atoms."""
        _, formulas = parse_document(text, self.signature)
        return formulas

    def load_sequent(self, text: str):
        return parse_sequent(text, self.signature)

    def load_script(self, path: str | Path, registry: LemmaSource | None = None) -> Proof:
        """A `.qp` proof script; its own preamble is merged into the run's signature."""
        text = read_text(path)
        proof = parse_script(text, self.signature, registry)
        logger.debug("script %s: %d lines in %s", path, len(proof), proof.calculus)
        return proof

    # ---- theories ----

    def load_theory(self, path: str | Path) -> Calculus:
        """Registers the extension a theory file describes, after its base."""
        spec = load_json(path)
        try:
            return CALCULI.register(define_theory(spec))
        except KeyError as e:
            raise KeyError(f"{path}: {e.args[0]}") from None

    def load_theories(self, paths=None) -> list[Calculus]:
        """
        Theory files in the order given (config `theories` by default). A file whose
        base is another file's extension must come after it.
        """
        paths = self.config.theories if paths is None else paths
        loaded = [self.load_theory(self.config.resolve(p)) for p in paths]
        if loaded:
            logger.info("registered %s", ", ".join(c.name for c in loaded))
        return loaded

    def load_theory_directory(self, base_path: str | Path) -> list[Calculus]:
        """Every theory file of a directory, bases before their extensions."""
        pending = dict(load_directory(base_path, ".json"))
        loaded = []
        while pending:
            ready = [k for k, spec in pending.items() if spec.get("base") in CALCULI]
            if not ready:
                raise KeyError(f"Theories {', '.join(sorted(pending))} in '{base_path}' name an unknown base.")
            for key in sorted(ready):
                loaded.append(CALCULI.register(define_theory(pending.pop(key))))
        return loaded
