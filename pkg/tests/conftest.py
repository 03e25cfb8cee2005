import pytest

from helpers import toss_game


@pytest.fixture
def toss():
    return toss_game()
