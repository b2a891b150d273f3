import pytest

from localh import builtin_triangulation
from localh.corpus import CORPUS_NAMES


@pytest.fixture(scope="session")
def triforce():
    return builtin_triangulation("triforce")


@pytest.fixture(scope="session")
def corpus():
    return {name: builtin_triangulation(name) for name in CORPUS_NAMES}
