import numpy as np
import pytest

from qbch.cyclic_code import LinearCode, code_from_zero_set
from qbch.cyclotomic import ZeroSet

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def hamming7():
    return code_from_zero_set(ZeroSet.of(7, 2, [1, 2, 4]))


@pytest.fixture(scope="session")
def simplex7():
    return code_from_zero_set(ZeroSet.of(7, 2, [0, 1, 2, 4]))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_binary_code(rng, n: int, k: int) -> LinearCode:
    return LinearCode(n, 2, rng.integers(0, 2, size=(k, n)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}  {detail}")
