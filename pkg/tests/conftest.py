# tests/conftest.py

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT / "src"))

import corpus  # noqa: E402  registers the corpus entries and the theory extensions
from corpus import SIG, CorpusRegistry, run_corpus  # noqa: E402
from logic.parser import parse_formula  # noqa: E402


@pytest.fixture(scope="session")
def project_root() -> Path:
    return PROJECT_ROOT


@pytest.fixture(scope="session")
def sig():
    """prob a, b, c, d, pi(1). prop p, q, s, r(1)."""
    return SIG


@pytest.fixture(scope="session")
def parse(sig):
    def _parse(text: str):
        return parse_formula(text, sig)
    return _parse


@pytest.fixture(scope="session")
def registry() -> CorpusRegistry:
    return CorpusRegistry()


@pytest.fixture(scope="session")
def corpus_results(registry):
    return run_corpus(registry, certify_entries=True)
