# tests/test_runner.py

import json

import pytest
from jsonschema import Draft202012Validator

from kernel import check, parse_script
from runner import EXIT_FAILED, EXIT_OK, EXIT_USAGE, Runner
from runner.cli import main
from utils import load_json


@pytest.fixture(scope="module")
def validator(project_root):
    schema = load_json(project_root / "data" / "schema" / "report.schema.json")
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


@pytest.fixture
def report(capsys, validator):
    """Runs the CLI with --json and returns (exit code, validated report)."""
    def _run(*argv):
        code = main([*argv, "--json"])
        data = json.loads(capsys.readouterr().out)
        validator.validate(data)
        return code, data
    return _run


def proof_path(project_root, name):
    return str(project_root / "proofs" / f"{name}.qp")


# ---- parse ----

def test_parse(report):
    code, data = report("parse", "p -> ?!p", "?a; a -> b |- ?b")
    assert code == EXIT_OK
    assert data["formulas"] == [{"text": "p -> ?!p", "sort": "proposition"},
                                {"text": "?a; a -> b |- ?b", "sort": "proposition"}]


def test_parse_text_output(capsys):
    assert main(["parse", "?!p -> p", "--mode", "fold"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "box p -> p  : proposition"


def test_parse_against_a_calculus(report):
    code, data = report("parse", "?a", "--calculus", "QH")
    assert code == EXIT_FAILED
    assert data["formulas"][0]["admitted"] is False


@pytest.mark.parametrize("argv", [
    ["parse", "a ->"],
    ["parse", "?p"],
    ["parse", "z"],
    ["parse", "a", "--calculus", "QZ"],
    ["check", "no/such/file.qp"],
    ["translate", "!p", "--target", "godel"],
    ["corpus", "show", "no.such.entry"],
    [],
])
def test_usage_errors_exit_with_two(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err


# ---- check ----

def test_check_accepts_a_script(report, project_root):
    code, data = report("check", proof_path(project_root, "galois_fwd"))
    assert code == EXIT_OK
    assert data["status"] == "accepted"
    assert data["footprint"] == sorted(["axiom:K", "axiom:S", "axiom:oc_imp", "axiom:oc_wn", "rule:oc_top"])


def test_check_reports_the_failing_line(report, project_root):
    code, data = report("check", proof_path(project_root, "corrupted"))
    assert code == EXIT_FAILED
    assert data["status"] == "rejected"
    assert data["failing_line"] == 3


def test_check_resolves_lemmas_against_the_corpus(report, project_root):
    code, _ = report("check", proof_path(project_root, "lemma_citation"))
    assert code == EXIT_OK


def test_check_under_another_calculus(report, project_root):
    code, data = report("check", proof_path(project_root, "galois_fwd"), "--calculus", "QH")
    assert code == EXIT_FAILED
    assert data["calculus"] == "QH"
    assert data["failing_line"] == 0


def test_check_minimal(report, project_root, tmp_path):
    script = tmp_path / "ksp.qp"
    script.write_text("calculus QHC+KSP\nprop p.\n1. ~!~p -> !p by axiom KSP [P:=p]\n", encoding="utf-8")
    theory = str(project_root / "data" / "theories" / "ksp.json")
    assert report("check", str(script), "--theory", theory)[0] == EXIT_OK
    assert report("check", str(script), "--minimal")[0] == EXIT_FAILED
    assert report("check", proof_path(project_root, "galois_fwd"), "--minimal")[0] == EXIT_OK


def test_check_text_output(capsys, project_root):
    assert main(["check", proof_path(project_root, "identity")]) == EXIT_OK
    assert "accepted in QH (5 lines)" in capsys.readouterr().out


# ---- translate and refute ----

@pytest.mark.parametrize("target, source, result", [
    ("negneg", "!p", "~~p"),
    ("box", "a -> b", "box (box a -> box b)"),
    ("embed_qs4", "box p -> p", "?!p -> p"),
    ("nabla", "a", "!?a"),
])
def test_translate(report, target, source, result):
    code, data = report("translate", source, "--target", target)
    assert code == EXIT_OK
    assert data["result"] == result


def test_refute(report):
    code, data = report("refute", "p -> ?!p")
    assert code == EXIT_OK
    assert data["status"] == "refuted"
    assert data["channel"] == "Box"
    assert len(data["countermodel"]["worlds"]) <= 3
    assert report("refute", "p -> ?!p", "--expect-theorem")[0] == EXIT_FAILED


def test_refute_reports_unknown_for_theorems(report, capsys):
    code, data = report("refute", "?!p -> p", "--expect-theorem")
    assert code == EXIT_OK
    assert data == {"command": "refute", "formula": "?!p -> p", "status": "unknown"}
    assert main(["refute", "?!p -> p"]) == EXIT_OK
    assert "no countermodel with at most 3 worlds" in capsys.readouterr().out


def test_refute_needs_one_propositional_formula(capsys):
    assert main(["refute", "forall x. r(x)"]) == EXIT_USAGE
    assert main(["refute", "p; q"]) == EXIT_USAGE


# ---- corpus ----

def test_corpus_list(report):
    code, data = report("corpus", "list", "--filter", "galois.*")
    assert code == EXIT_OK
    assert [e["id"] for e in data["entries"]][:2] == ["galois.bwd", "galois.fwd"]


def test_corpus_show(report):
    code, data = report("corpus", "show", "oc_reverse")
    assert code == EXIT_OK
    entry = data["entry"]
    assert entry["statement"] == "!p |- p"
    assert check(parse_script(entry["script"])).ok


@pytest.mark.slow
def test_corpus_run(report, tmp_path):
    csv = tmp_path / "corpus.csv"
    code, data = report("corpus", "run", "--filter", "galois.*", "--certify", "--csv", str(csv))
    assert code == EXIT_OK
    assert data["rejected"] == 0
    assert data["accepted"] == len(data["entries"]) == 6
    assert all(e["certified"] == {"box": True, "negneg": True} for e in data["entries"])
    assert csv.is_file()


@pytest.mark.slow
def test_corpus_export(report, tmp_path, registry):
    code, data = report("corpus", "export", str(tmp_path), "--filter", "sup_inf.*")
    assert code == EXIT_OK
    assert len(data["written"]) == 4
    for path in data["written"]:
        with open(path, encoding="utf-8") as handle:
            proof = parse_script(handle.read(), registry=registry)
        assert check(proof, registry).ok


@pytest.mark.slow
def test_runner_quiet_corpus_run(project_root, capsys):
    runner = Runner(project_root, quiet=True)
    assert runner.corpus_run("cpc.*") == EXIT_OK
    assert "entries accepted" in capsys.readouterr().out
