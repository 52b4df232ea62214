import pytest

from qswindows import catalog
from qswindows.rep import QSRep
from qswindows.root_data import RootDatum
from qswindows.windows import Context


@pytest.fixture(scope="session")
def torus22():
    return catalog.torus_rep((1,), (1,), (-1,), (-1,))


@pytest.fixture(scope="session")
def torus33():
    return catalog.torus_rep((1,), (1,), (1,), (-1,), (-1,), (-1,))


@pytest.fixture(scope="session")
def gl2rep():
    return QSRep.build(RootDatum.gl(2), catalog.GL2_WEIGHTS)


@pytest.fixture(scope="session")
def ctx22(torus22):
    return Context(torus22)


@pytest.fixture(scope="session")
def ctx33(torus33):
    return Context(torus33)


@pytest.fixture(scope="session")
def ctxgl2(gl2rep):
    return Context(gl2rep)


@pytest.fixture(scope="session")
def small_corpus():
    """A smaller seeded corpus for per-module property tests; the acceptance
    suite builds the full one itself."""
    return catalog.random_corpus(421, {1: 8, 2: 5, 3: 2})

