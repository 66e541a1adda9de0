# src/runner/runner.py

import dataclasses
import logging
from pathlib import Path

from calculi.calculi import get_calculus
from corpus import CorpusRegistry, run_corpus
from data_ops.data_loader import DataLoader
from kernel.kernel import check
from kernel.script import write_script
from logic.errors import UnknownLemma
from logic.formula import Formula
from logic.printer import format_formula, format_sequent
from semantics.refuter import Refutation, refute_qhc
from translate.translate import get_translation
from utils.summary import CorpusSummary
from utils.utils import Config, dump_json, load_config

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class Runner:
    """
    Orchestrates one command: configuration, signature and theories first, then the
    requested work. Every command method prints its result and returns the exit code.
    """

    def __init__(self, project_root_path: Path, config_path: str | Path | None = None,
                 signature_path: str | Path | None = None, theories=(), as_json: bool = False,
                 quiet: bool = False):
        """
        Args:
            project_root_path (Path): the project root; data/config.json is read from it
                when no config_path is given.
            config_path: a config file overriding the project default.
            signature_path: a signature file overriding the configured default.
            theories: extra theory files, registered after the configured ones.
            as_json (bool): print JSON reports instead of text.
            quiet (bool): no progress bars or banners.
        """
        self.project_root = Path(project_root_path)
        default = self.project_root / "data" / "config.json"
        if config_path is None and default.is_file():
            config_path = default
        self.config: Config = load_config(config_path)
        self.as_json = as_json
        self.quiet = quiet

        self.loader = DataLoader(self.config, signature_path)
        self.loader.load_theories()
        self.loader.load_theories(list(theories))
        self._registry: CorpusRegistry | None = None

    @property
    def registry(self) -> CorpusRegistry:
        if self._registry is None:
            self._registry = CorpusRegistry()
        return self._registry

    def _emit(self, report: dict, text: str):
        print(dump_json(report) if self.as_json else text)

    def _one_formula(self, text: str) -> Formula:
        formulas = self.loader.load_formulas(text)
        if len(formulas) != 1:
            raise ValueError(f"Expected one formula, got {len(formulas)} in '{text}'.")
        return formulas[0]

    # -----------------------------
    # Commands
    # -----------------------------

    def parse(self, texts: list[str], mode: str = "keep", calculus: str | None = None) -> int:
        """Typechecks each formula and prints it in canonical form with its sort."""
        target = get_calculus(calculus) if calculus else None
        rows, exit_code = [], EXIT_OK
        for text in texts:
            hypotheses, goal = self.loader.load_sequent(text)
            row = {"text": format_sequent(hypotheses, goal, mode), "sort": goal.sort.value}
            if target is not None:
                row["admitted"] = all(target.admits(f) for f in (*hypotheses, goal))
                if not row["admitted"]:
                    exit_code = EXIT_FAILED
            rows.append(row)
        lines = [f"{r['text']}  : {r['sort']}" + ("" if r.get("admitted", True)
                                                  else f"  (not in {calculus})") for r in rows]
        self._emit({"command": "parse", "formulas": rows}, "\n".join(lines))
        return exit_code

    def check(self, path: str | Path, calculus: str | None = None, minimal: bool = False) -> int:
        """Kernel-checks a proof script; lemma citations resolve against the corpus."""
        proof = self.loader.load_script(path, self.registry)
        if calculus:
            proof = dataclasses.replace(proof, calculus=get_calculus(calculus).name)
        verdict = check(proof, self.registry, minimal=minimal)
        report = {"command": "check", "file": str(path), "calculus": proof.calculus, **verdict.to_dict()}
        if verdict.ok:
            report["footprint"] = sorted(verdict.footprint)
            text = f"{path}: accepted in {proof.calculus} ({len(proof)} lines)"
        else:
            text = f"{path}: rejected at line {verdict.line}: {verdict.reason}"
        self._emit(report, text)
        return EXIT_OK if verdict.ok else EXIT_FAILED

    def translate(self, text: str, target: str, mode: str = "keep") -> int:
        translation = get_translation(target)
        image = translation(self._one_formula(text))
        shown = format_formula(image, mode)
        self._emit({"command": "translate", "translation": translation.name, "source": text,
                    "result": shown}, shown)
        return EXIT_OK

    def refute(self, text: str, expect_theorem: bool = False, max_worlds: int | None = None) -> int:
        """Looks for a certified countermodel; a refuted formula fails only under expect_theorem."""
        max_worlds = max_worlds or self.config.max_countermodel_worlds
        f = self._one_formula(text)
        verdict = refute_qhc(f, max_worlds)
        refuted = isinstance(verdict, Refutation)
        if refuted:
            model = verdict.countermodel.to_json()
            text_out = (f"refuted via {verdict.channel}: {format_formula(verdict.translated)} fails at "
                        f"world {verdict.world} of a {len(model['worlds'])}-world model\n"
                        f"  relation: {model['relation']}\n  valuation: {model['valuation']}")
        else:
            text_out = f"no countermodel with at most {max_worlds} worlds"
        self._emit({"command": "refute", "formula": format_formula(f), **verdict.to_dict()}, text_out)
        return EXIT_FAILED if refuted and expect_theorem else EXIT_OK

    # ---- corpus ----

    def corpus_run(self, pattern: str = "*", workers: int | None = None, csv_path: str | None = None,
                   certify: bool = False) -> int:
        workers = workers or self.config.corpus_workers
        results = run_corpus(self.registry, pattern, workers=workers,
                             progress=not (self.quiet or self.as_json), certify_entries=certify)
        if not results:
            raise UnknownLemma(f"No corpus entry matches '{pattern}'.")
        summary = CorpusSummary(results)
        if csv_path:
            summary.to_csv(csv_path)
            logger.info("wrote %s", csv_path)
        if self.as_json:
            print(dump_json({"command": "corpus", "entries": [r.to_dict() for r in results],
                             "accepted": summary.kpis["accepted"], "rejected": summary.kpis["rejected"]}))
        elif self.quiet:
            print(f"{summary.kpis['accepted']} of {summary.kpis['entries']} entries accepted")
        else:
            summary.print_summary()
        certified_ok = summary.kpis["certification_failures"] == 0
        return EXIT_OK if summary.ok and certified_ok else EXIT_FAILED

    def corpus_list(self, pattern: str = "*") -> int:
        rows = [{"id": s.id, "calculus": s.calculus, "statement": s.statement, "anchor": s.anchor}
                for s in (self.registry.specs[i] for i in self.registry.ids(pattern))]
        text = "\n".join(f"{r['id']:<28} {r['calculus']:<14} {r['statement']}" for r in rows)
        self._emit({"command": "corpus", "entries": rows}, text)
        return EXIT_OK

    def corpus_show(self, id: str) -> int:
        entry = self.registry.lemma(id)
        script = write_script(entry.proof, comments=[entry.id, entry.anchor])
        report = {"command": "corpus", "entry": {
            "id": entry.id, "calculus": entry.calculus, "statement": entry.statement,
            "anchor": entry.anchor, "citations": sorted(entry.citations), "lines": len(entry.proof),
            "script": script}}
        text = (f"{entry.id} ({entry.calculus}): {entry.statement}\n"
                f"  {entry.anchor}\n"
                f"  cites: {', '.join(sorted(entry.citations)) or 'nothing'}\n\n{script}")
        self._emit(report, text)
        return EXIT_OK

    def corpus_export(self, directory: str | Path, pattern: str = "*") -> int:
        """One .qp script per entry, named after its id."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        written = []
        for id in self.registry.order(pattern):
            entry = self.registry.lemma(id)
            path = directory / f"{id}.qp"
            path.write_text(write_script(entry.proof, comments=[entry.id, entry.anchor]), encoding="utf-8")
            written.append(str(path))
        self._emit({"command": "corpus", "written": written}, f"wrote {len(written)} scripts to {directory}")
        return EXIT_OK
