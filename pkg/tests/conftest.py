import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from g2cert.cli import _sextic_of
from g2cert.palindromic import palindromic_reduce
from g2cert.polyfile import bundled_polyfile
from g2cert.reduction import reduction_context


@pytest.fixture(scope="session")
def bundle_a():
    return bundled_polyfile("frobenius2")


@pytest.fixture(scope="session")
def bundle_b():
    return bundled_polyfile("frobenius3")


@pytest.fixture(scope="session")
def sextic_a(bundle_a):
    return _sextic_of(bundle_a)


@pytest.fixture(scope="session")
def sextic_b(bundle_b):
    return _sextic_of(bundle_b)


@pytest.fixture(scope="session")
def pair_a(sextic_a):
    return palindromic_reduce(sextic_a)


@pytest.fixture(scope="session")
def pair_b(sextic_b):
    return palindromic_reduce(sextic_b)


@pytest.fixture(scope="session")
def ctx_a(sextic_a):
    return reduction_context(sextic_a)


@pytest.fixture(scope="session")
def ctx_b(sextic_b):
    return reduction_context(sextic_b)
