import pytest

from qbox.core import PhysicalParams, make_lattice


@pytest.fixture
def unit_params():
    return PhysicalParams()


@pytest.fixture
def lattice():
    def _make(J0, **kw):
        return make_lattice(PhysicalParams(**kw), J0)

    return _make
