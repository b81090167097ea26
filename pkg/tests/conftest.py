import pytest

from sensilab.core import BooleanFunction


class ConstantFunction(BooleanFunction):
    def __init__(self, n, value):
        self.n = n
        self.value = value

    def eval(self, x):
        self._check_arity(x)
        return self.value


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    # First kernel call may pay numba compilation; keep it out of timed tests.
    from sensilab import SearchConfig, SimplifiedWSF, gray_scan

    gray_scan(SimplifiedWSF(4), SearchConfig(n=4))
