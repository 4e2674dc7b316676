"""Shared fixtures and sweep helpers for the test suite."""

import itertools
import random
from pathlib import Path

import pytest

from bowvariety import brane

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "bowvariety" / "fixtures"

EXAMPLE_3BLUE = "0/1\\1/2\\2\\2/0"
TSTAR_P1 = "0/1\\1\\1/0"
POINT_DIAGRAM = "0\\1/0"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def diagram_strings(max_colored, max_label):
    """Every diagram DSL string with at most ``max_colored`` colored lines,
    interior labels at most ``max_label``, and both colors present."""
    for k in range(2, max_colored + 1):
        for colors in itertools.product("/\\", repeat=k):
            if "/" not in colors or "\\" not in colors:
                continue
            for labels in itertools.product(range(max_label + 1), repeat=k - 1):
                s = "0"
                for i, c in enumerate(colors):
                    s += c
                    s += str(labels[i]) if i < k - 1 else "0"
                yield s


def admissible_diagrams(max_colored, max_label):
    for s in diagram_strings(max_colored, max_label):
        d = brane.parse(s)
        if brane.admissible(d):
            yield d


def random_admissible_diagrams(seed, trials, min_colored, max_colored, max_label):
    """Seeded random admissible diagrams, biased towards labels that change
    slowly (those are far more likely to admit tie diagrams)."""
    rng = random.Random(seed)
    for _ in range(trials):
        k = rng.randint(min_colored, max_colored)
        colors = [rng.choice("/\\") for _ in range(k)]
        if "/" not in colors or "\\" not in colors:
            continue
        labels = []
        prev = 0
        for _i in range(k - 1):
            if rng.random() < 0.8:
                labels.append(rng.randint(max(0, prev - 2), min(max_label, prev + 2)))
            else:
                labels.append(rng.randint(0, max_label))
            prev = labels[-1]
        s = "0"
        for i, c in enumerate(colors):
            s += c
            s += str(labels[i]) if i < k - 1 else "0"
        d = brane.parse(s)
        if brane.admissible(d):
            yield d
