import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flexgroup import parse_group_spec


@pytest.fixture(scope="session")
def built():
    """Session-wide group cache; graphs and verdicts are cached per instance."""
    cache = {}

    def make(spec: str):
        if spec not in cache:
            cache[spec] = parse_group_spec(spec)
        return cache[spec]

    return make


# small groups for which the pure-python oracles are cheap enough
ORACLE_SPECS = [
    "C1",
    "C6",
    "C12",
    "E(2,2)",
    "E(2,3)",
    "E(3,2)",
    "Q8",
    "Perm(3; (0 1), (0 1 2))",
    "Perm(4; (0 1 2), (1 2 3))",
    "Perm(4; (0 1 2 3), (0 3)(1 2))",
    "C2 x C4",
    "MM(5,2,2,4)",
    "MM(3,2,2,2)",
    "Aff(3,2,2)",
]
