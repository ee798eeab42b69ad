import pytest

from contour_duo.kernels import numba_backend


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the jitted kernels once so timed tests run hot."""
    numba_backend.warm_up()
