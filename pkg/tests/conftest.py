import random
from pathlib import Path

import pytest

from evoradical import EvolutionAlgebra
from evoradical.oracle import random_algebra

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def example_3_5():
    # e1^2 = 0, e2^2 = e1, e3^2 = e4, e4^2 = e5, e5^2 = e3
    return EvolutionAlgebra.from_squares(5, {1: {0: 1}, 2: {3: 1}, 3: {4: 1}, 4: {2: 1}})


def example_4_7():
    # as above but e3^2 = e2 + e4
    return EvolutionAlgebra.from_squares(5, {1: {0: 1}, 2: {1: 1, 3: 1}, 3: {4: 1}, 4: {2: 1}})


def example_3_13():
    # e1^2 = e2^2 = -e3^2 = e2 + e3
    return EvolutionAlgebra.from_squares(
        3, {0: {1: 1, 2: 1}, 1: {1: 1, 2: 1}, 2: {1: -1, 2: -1}}
    )


def zero_algebra(n):
    return EvolutionAlgebra.from_squares(n, {})


def chain_algebra(k):
    # e1^2 = 0, e_i^2 = e_{i-1}
    return EvolutionAlgebra.from_squares(k, {i: {i - 1: 1} for i in range(1, k)})


def self_loops(n):
    return EvolutionAlgebra.from_squares(n, {i: {i: 1} for i in range(n)})


def random_corpus(dims, per_dim, seed=20240531):
    """Seeded corpus; densities cycle through 0.1 .. 0.9."""
    rng = random.Random(seed)
    densities = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
    out = []
    for dim in dims:
        for k in range(per_dim):
            p = densities[k % len(densities)]
            p0 = densities[(k // len(densities)) % len(densities)] / 2
            out.append(random_algebra(rng, dim, p_zero_row=p0, p_entry=p))
    return out


def one_based(*xs):
    return frozenset(x - 1 for x in xs)


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(range(1, 8), 60, seed=7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
