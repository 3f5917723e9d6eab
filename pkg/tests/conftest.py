import sys
from pathlib import Path

import pytest

from framedkh.diagram import parse_diagram
from framedkh.verify import corpus_files, load_corpus

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_dir():
    return corpus_files()[0].parent


def D(text):
    return parse_diagram(text)
