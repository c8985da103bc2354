import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from superalg.core import algebra, algebra_from_labels, basis, zero_algebra
from superalg.forms import form
from superalg.maps import map_from_images


@pytest.fixture(scope="session")
def L():
    b = basis([("l0", 0), ("k0", 0), ("l1", 1), ("k1", 1)])
    return algebra_from_labels(b, {("l0", "l1"): {"k1": 1}, ("l1", "l1"): {"k0": 1}})


@pytest.fixture(scope="session")
def L_maps(L):
    b = L.basis
    d = map_from_images(
        b, {"l0": {"l0": 1}, "l1": {"l1": 1}, "k0": {"k0": 2}, "k1": {"k1": 2}}, 0
    )
    delta = map_from_images(
        b, {"l0": {"l1": 1}, "l1": {"l0": 1}, "k0": {"k1": 2}, "k1": {"k0": 1}}, 1
    )
    dbar = map_from_images(b, {"k0": {"k1": 2}, "l1": {"l0": 1}}, 1)
    return d, delta, dbar


@pytest.fixture(scope="session")
def m_alg():
    b = basis([("e0", 0), ("e1", 1)])
    return algebra_from_labels(b, {("e0", "e1"): {"e1": 1}})


@pytest.fixture(scope="session")
def m_omega():
    return form([[0, 1], [-1, 0]], 1)


@pytest.fixture(scope="session")
def abelian11():
    return algebra(basis([("x", 0), ("y", 1)]), {})


@pytest.fixture(scope="session")
def zero():
    return zero_algebra()
