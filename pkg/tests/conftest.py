from pathlib import Path

import pytest

from pastlab import lexicon as lx

DATA = Path(__file__).resolve().parents[1] / "src" / "pastlab" / "data"


@pytest.fixture(scope="session")
def entries():
    return lx.load_lexicon(DATA / "lexicon.tsv")


@pytest.fixture(scope="session")
def test_lemmas():
    return lx.load_test_set(DATA / "test_verbs.txt")


@pytest.fixture(scope="session")
def train_entries(entries, test_lemmas):
    held_out = set(test_lemmas)
    return [e for e in entries if e.lemma_orth not in held_out]


@pytest.fixture(scope="session")
def nonce_verbs():
    return lx.load_nonce(DATA / "nonce.tsv")


@pytest.fixture(scope="session")
def by_lemma(entries):
    return {e.lemma_orth: e for e in entries}
