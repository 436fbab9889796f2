import pytest

from benfordlab import _backend


@pytest.fixture
def numpy_backend():
    """Run a test under the pure-numpy kernels, restoring afterwards."""
    previous = _backend.get_backend()
    _backend.set_backend("numpy")
    yield
    _backend.set_backend(previous)


def pytest_report_header(config):
    return f"benfordlab kernel backend: {_backend.get_backend()}"
