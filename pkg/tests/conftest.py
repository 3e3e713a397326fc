"""Fixtures compartidas."""

import numpy as np
import pytest

from zetagenus.core.generos import make_genus
from zetagenus.core.lie import Alfabeto


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope='session')
def ab():
    return Alfabeto.dos_letras()


@pytest.fixture(scope='session')
def gamma():
    return make_genus('gamma', 8)
