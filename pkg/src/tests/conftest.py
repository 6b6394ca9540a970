import pytest

from listcore.models import ListState, RequestSequence
from tests.utils import APIClient


@pytest.fixture(scope="session")
def api_client():
    return APIClient()


@pytest.fixture
def demo_list():
    return ListState.from_symbols([1, 2, 3])


@pytest.fixture
def demo_sequence():
    return RequestSequence.of([1, 2, 2, 3, 3, 3], source_name="demo")
