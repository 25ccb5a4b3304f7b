import pytest

from schubert import build


@pytest.fixture
def rs(request):
    """Root system for the type named by an indirect parameter."""
    return build(request.param)
