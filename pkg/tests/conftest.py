import pytest

from stringtoric.rootdata import build_root_system


@pytest.fixture
def a2():
    return build_root_system("A2")


@pytest.fixture
def a3():
    return build_root_system("A3")
