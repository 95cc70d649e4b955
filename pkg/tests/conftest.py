from pathlib import Path

import pytest

from neutre.cli import _data_path
from neutre.dictionary import load_dictionary
from neutre.morphology import load_lexicon

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def dictionary():
    return load_dictionary(_data_path("dictionary.tsv"))


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(_data_path("lexicon.tsv"))


@pytest.fixture(scope="session")
def golden_sources():
    return (DATA / "golden" / "golden_sources.txt").read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def golden_expected():
    return (DATA / "golden" / "golden_expected.txt").read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def golden_conllu():
    return (DATA / "golden" / "golden.conllu").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def depgold_conllu():
    return (DATA / "depgold" / "depgold.conllu").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def depgold_gold():
    from neutre.pipeline import read_deps_tsv

    return read_deps_tsv(DATA / "depgold" / "depgold_gold.tsv")
