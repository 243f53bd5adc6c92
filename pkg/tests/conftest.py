import pytest
from hypothesis import settings

from biserial.families import build_lambda, build_lambda1prime
from biserial.fields import PrimeField
from biserial.reps import Algebra

settings.register_profile("ci", derandomize=True, max_examples=60)
settings.load_profile("ci")


F101 = PrimeField(101)


@pytest.fixture(scope="session")
def alg0():
    return Algebra(build_lambda(1, 0))


@pytest.fixture(scope="session")
def alg1():
    return Algebra(build_lambda(1, 1))


@pytest.fixture(scope="session")
def alg2():
    return Algebra(build_lambda(1, 2))


@pytest.fixture(scope="session")
def alg3():
    return Algebra(build_lambda(1, 3))


@pytest.fixture(scope="session")
def alg5():
    return Algebra(build_lambda(1, 5))


@pytest.fixture(scope="session")
def algp():
    return Algebra(build_lambda1prime(1))


@pytest.fixture(scope="session")
def algp_f101():
    return Algebra(build_lambda1prime(1), field=F101)
