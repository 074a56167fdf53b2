import pytest

from squaretori.arith import sieve_multiplicative


@pytest.fixture(scope="session")
def sieve_100k():
    return sieve_multiplicative(100_000)


@pytest.fixture(scope="session")
def sieve_million():
    return sieve_multiplicative(1_000_000)
