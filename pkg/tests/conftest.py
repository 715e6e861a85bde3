import pytest

from fqdioph._kernels import available_backends
from fqdioph.ffcore import make_field

BACKENDS = available_backends()


@pytest.fixture(params=BACKENDS, ids=[k.BACKEND for k in BACKENDS])
def backend(request):
    return request.param


@pytest.fixture
def F():
    return make_field
