import pytest

import corpus
from apidialog.retrieval import RetrievalIndex


@pytest.fixture(scope="session")
def demo_graph():
    return corpus.load_corpus_graph("demo")


@pytest.fixture(scope="session")
def desk_graph():
    return corpus.load_corpus_graph("desk")


@pytest.fixture(scope="session")
def demo_index(demo_graph):
    return RetrievalIndex(demo_graph)


@pytest.fixture(scope="session")
def desk_index(desk_graph):
    return RetrievalIndex(desk_graph)
