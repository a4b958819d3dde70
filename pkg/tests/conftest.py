import os

import pytest

from obstructa.enumeration import enumerate_graphs

# The acceptance criteria run at n <= 9 by default; lower this locally for a
# faster development loop (the theorem sweeps then cover less ground).
ATLAS_MAX_N = max(5, min(9, int(os.environ.get("OBSTRUCTA_TEST_MAX_N", "9"))))


@pytest.fixture(scope="session")
def atlas8():
    """All isomorphism classes up to 8 vertices, keyed by vertex count."""
    top = min(8, ATLAS_MAX_N)
    return {n: tuple(enumerate_graphs(n)) for n in range(top + 1)}


@pytest.fixture(scope="session")
def atlas():
    """All isomorphism classes up to the acceptance scale (default 9)."""
    return {n: tuple(enumerate_graphs(n)) for n in range(ATLAS_MAX_N + 1)}
