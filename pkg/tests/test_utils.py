# tests/test_utils.py

import json
import logging

import pandas as pd
import pytest

from corpus import EntryResult
from data_ops import DataLoader
from kernel import Accepted, Rejected, check
from logic.errors import ParseError
from utils import (
    Config, CorpusSummary, dump_json, load_config, load_directory, load_json, save_json,
    verbosity_level,
)
from utils.summary import COLUMNS


@pytest.fixture
def config(project_root):
    return load_config(project_root / "data" / "config.json")


@pytest.fixture
def results():
    return [
        EntryResult("galois.fwd", "QHC", Accepted(frozenset({"axiom:K"})), 10, 0.5),
        EntryResult("box.1", "QHC", Rejected(3, "bad axiom"), 4, 0.1),
        EntryResult("ipc.id", "QH", Accepted(), 5, 0.2, {"box": True, "negneg": False}),
    ]


# ---- config and files ----

def test_verbosity_levels():
    assert [verbosity_level(n) for n in (0, 1, 2, 5)] == [logging.WARNING, logging.INFO,
                                                          logging.DEBUG, logging.DEBUG]


def test_shipped_config(project_root, config):
    assert config.root == project_root / "data"
    assert len(config.theories) == 10
    assert config.max_countermodel_worlds == 3
    assert config.resolve(config.default_signature).is_file()
    assert load_config() == Config()


def test_config_rejects_unknown_keys(tmp_path):
    path = save_json({"corpus_workers": 4, "colour": "blue"}, tmp_path / "config.json")
    with pytest.raises(KeyError):
        load_config(path)


def test_config_keeps_defaults_for_missing_keys(tmp_path):
    config = load_config(save_json({"corpus_workers": 4}, tmp_path / "config.json"))
    assert config.corpus_workers == 4
    assert config.fuzz_seed == Config().fuzz_seed
    assert config.resolve("/abs/path").as_posix() == "/abs/path"


def test_json_helpers(tmp_path):
    assert dump_json({"b": 1, "a": [1, 2]}).startswith('{\n  "a"')
    path = save_json({"x": 1}, tmp_path / "nested" / "out.json")
    assert load_json(path) == {"x": 1}
    (tmp_path / "broken.json").write_text("{", encoding="utf-8")
    with pytest.raises(ValueError):
        load_json(tmp_path / "broken.json")
    with pytest.raises(FileNotFoundError):
        load_json(tmp_path / "missing.json")


def test_load_directory(project_root, tmp_path):
    signatures = load_directory(project_root / "data" / "signatures", ".sig")
    assert "prob a, b, c, d, pi(1)." in signatures["default"]
    with pytest.raises(FileNotFoundError):
        load_directory(tmp_path / "nowhere", ".json")


# ---- summary ----

def test_summary_kpis(results):
    summary = CorpusSummary(results)
    assert summary.kpis["entries"] == 3
    assert summary.kpis["accepted"] == 2
    assert summary.kpis["rejected"] == 1
    assert summary.kpis["total_lines"] == 19
    assert summary.kpis["slowest"] == "galois.fwd"
    assert summary.kpis["per_calculus"] == {"QH": 1, "QHC": 2}
    assert summary.kpis["certified"] == 1
    assert summary.kpis["certification_failures"] == 1
    assert not summary.ok
    assert list(summary.rejected()["id"]) == ["box.1"]


def test_summary_by_family(results):
    families = CorpusSummary(results).by_family().set_index("family")
    assert families.loc["galois", "accepted"] == 1
    assert families.loc["box", "accepted"] == 0
    assert families.loc["ipc", "lines"] == 5


def test_summary_csv(results, tmp_path):
    path = CorpusSummary(results).to_csv(tmp_path / "out" / "corpus.csv")
    table = pd.read_csv(path)
    assert list(table.columns) == COLUMNS
    assert len(table) == 3


def test_summary_printout(results, capsys):
    CorpusSummary(results).print_summary()
    out = capsys.readouterr().out
    assert "Corpus Summary" in out
    assert "[ Rejections ]" in out
    assert "box.1: line 3: bad axiom" in out
    assert "[ Semantic Certification ]" in out


def test_summary_needs_results():
    with pytest.raises(ValueError):
        CorpusSummary([])


# ---- loader ----

def test_loader_reads_the_configured_signature(config):
    loader = DataLoader(config)
    assert "pi" in loader.signature
    assert loader.signature.lookup("r").sort.value == "proposition"


def test_loader_formulas_and_sequents(config):
    loader = DataLoader(config)
    formulas = loader.load_formulas("prob e. a & e; ?e")
    assert [f.sort.value for f in formulas] == ["problem", "proposition"]
    hypotheses, goal = loader.load_sequent("?a -> p |- a -> !p")
    assert len(hypotheses) == 1 and goal.sort.value == "problem"


def test_loader_scripts(config, project_root):
    proof = DataLoader(config).load_script(project_root / "proofs" / "galois_fwd.qp")
    assert check(proof).ok


def test_loader_names_the_bad_signature_file(tmp_path):
    path = tmp_path / "bad.sig"
    path.write_text("prob a", encoding="utf-8")
    with pytest.raises(ParseError, match="bad.sig"):
        DataLoader(signature_path=path).signature


def test_loader_theories(config, project_root):
    loader = DataLoader(config)
    assert [c.name for c in loader.load_theories()][:2] == ["QHC+HNIP", "QHC+KSP"]
    loaded = loader.load_theory_directory(project_root / "data" / "theories")
    assert len(loaded) == 10
    assert loader.load_theory(project_root / "data" / "theories" / "ksp.json").name == "QHC+KSP"


def test_loader_refuses_theories_without_a_known_base(tmp_path):
    spec = {"name": "QX+Y", "base": "QX", "declarations": "prop P.", "axioms": {"Y": "P"}}
    (tmp_path / "y.json").write_text(json.dumps(spec), encoding="utf-8")
    with pytest.raises(KeyError):
        DataLoader().load_theory_directory(tmp_path)
    (tmp_path / "z.json").write_text(json.dumps({"name": "QZ"}), encoding="utf-8")
    with pytest.raises(KeyError, match="z.json"):
        DataLoader().load_theory(tmp_path / "z.json")
