import random

import pytest
from hypothesis import strategies as st

from intransdice.partition import RegularPartition


def random_partition(n, N, rng):
    ground = list(range(1, N * n + 1))
    rng.shuffle(ground)
    return RegularPartition(ground[i * N:(i + 1) * N] for i in range(n))


def random_disjoint(rng, sizes, hi):
    """Disjoint random subsets of 1..hi with the given sizes."""
    pool = rng.sample(range(1, hi + 1), sum(sizes))
    out, k = [], 0
    for s in sizes:
        out.append(sorted(pool[k:k + s]))
        k += s
    return out


def brute_q(A, B):
    return sum(1 if a > b else -1 for a in A for b in B)


@st.composite
def partitions(draw, max_n=6, max_N=5, N=None):
    n = draw(st.integers(1, max_n))
    N = N if N is not None else draw(st.integers(1, max_N))
    perm = draw(st.permutations(range(1, N * n + 1)))
    return RegularPartition(perm[i * N:(i + 1) * N] for i in range(n))


@pytest.fixture
def rng():
    return random.Random(20190501)


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
