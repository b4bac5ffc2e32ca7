import pytest

from sloped_width.decomposition import Decomposition
from sloped_width.slope import CLOSED, Slope
from sloped_width.surface import Surface


@pytest.fixture
def rs():
    """A generic rational slope."""
    return Slope.rational(3, 5)


def closed_decomp(*genera):
    thick = tuple(Surface.single(g, 0) for g in genera)
    thin = tuple(Surface.single(0, 0) for _ in genera[1:])
    return Decomposition(CLOSED, thick, thin)
