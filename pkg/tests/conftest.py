import pytest

from cubicmcm.fields import GF, QQ
from cubicmcm.poly import polys


@pytest.fixture(params=[QQ, GF(7)], ids=["QQ", "GF7"])
def field(request):
    return request.param


@pytest.fixture
def xs(field):
    return polys(field, ("x0", "x1", "x2"))
