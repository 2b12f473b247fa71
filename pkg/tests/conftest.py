import itertools

import numpy as np
import pytest

from gapkit import FnTable


def table(k, ell, n, fn):
    return FnTable.from_callable(k, ell, n, fn)


XOR = FnTable(2, 2, 2, [0, 1, 1, 0])
AND = FnTable(2, 2, 2, [0, 0, 0, 1])
SUM3 = table(2, 2, 3, lambda a, b, c: (a + b + c) % 2)
SUM4 = table(2, 2, 4, lambda *x: sum(x) % 2)
MAJ = table(2, 2, 3, lambda a, b, c: (a * b + a * c + b * c) % 2)
AND3 = table(2, 2, 3, lambda a, b, c: a & b & c)
PROJ1_K3 = table(3, 2, 3, lambda a, b, c: int(a == 1))
# indicator of the six permutations of (0, 1, 2)
PERM_IND = table(3, 2, 3, lambda a, b, c: int(len({a, b, c}) == 3))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def all_tables(k, ell, n):
    for vals in itertools.product(range(ell), repeat=k**n):
        yield FnTable(k, ell, n, vals)


# criterion number -> (title, passed, seconds); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, secs = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f} s)")
