import pytest
from hypothesis import settings

from wodc import example_graph

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def demo8():
    return example_graph("demo8")


@pytest.fixture(scope="session")
def demo9():
    return example_graph("demo9")
