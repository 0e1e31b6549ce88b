import random
from dataclasses import replace
from pathlib import Path

import pytest
from seqconv import settings
from seqconv.catalog import get_entry
from seqconv.catalog import random_horadam_pair

SRC_DIR = (Path(__file__).parent / "data").resolve()

# this is a monkey patch of config file
settings.SETTINGS_FILE = str(SRC_DIR / "settings.json")


@pytest.fixture(scope="module")
def acceptance_ids():
    with (SRC_DIR / "acceptance_ids.txt").open() as f:
        return [line.strip() for line in f if line.strip()]


@pytest.fixture(scope="module")
def horadam_pairs():
    """200 seeded random Horadam pairs with |a|, |b|, |p|, |q| <= 5, pq != 0 and Δ != 0."""
    rng = random.Random(20240229)
    return [random_horadam_pair(rng) for _ in range(200)]


def perturbed(identity: str, name: str = "perturbed"):
    """A copy of a catalog entry whose right-hand side is off by one."""
    entry = get_entry(identity)
    rhs = entry.rhs
    return replace(entry, id=name, rhs=lambda r, n: rhs(r, n) + 1)
