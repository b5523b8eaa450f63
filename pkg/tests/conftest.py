import pytest

from mlqkit.mlq import MLQ


@pytest.fixture
def fm_example():
    """The running example: type (1,0,3,3,2), rw 53.432.5431."""
    return MLQ.make(5, [{1, 3, 4, 5}, {2, 3, 4}, {3, 5}])


@pytest.fixture
def collapsing_example():
    """Five-row queue with maj 4 collapsing to shape (5,4,3,3,1,1)."""
    return MLQ.make(6, [{1, 3, 4, 5}, {2, 3, 4, 6}, {2, 3, 4, 5}, {1, 4, 6}, {3, 5}])


@pytest.fixture
def quinv_example():
    """Queue of shape (4,4,3,2) with type (2,0,0,4,4,3) and maj 3."""
    return MLQ.make(6, [{1, 4, 5, 6}, {2, 3, 4, 5}, {1, 4, 6}, {3, 4}])


@pytest.fixture
def region_example():
    """Nine-column queue whose active regions for i = 2, 5, 7 are pinned."""
    return MLQ.make(
        9, [{2, 3, 5, 7, 8, 9}, {2, 3, 4, 6, 7, 8}, {1, 2, 3, 5, 6, 8}, {3, 6, 9}, {2}]
    )
