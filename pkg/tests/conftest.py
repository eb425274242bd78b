import pytest

from toricgraph import fixtures


@pytest.fixture(scope="session")
def corpus():
    return fixtures()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus graphs with at most 14 edges (oracle-tractable)."""
    return {name: g for name, g in corpus.items() if g.edge_count <= 14}
