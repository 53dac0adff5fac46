import random

import pytest

from floercone import GradedComplex
from floercone.ranks import ProfileWarning


@pytest.fixture(autouse=True)
def _quiet_profile_warnings():
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ProfileWarning)
        yield


def random_matching_complex(rng: random.Random, size: int, name: str = "rand") -> GradedComplex:
    """Random valid complex: gradings in [-3, 3], arrows a strictly
    grading-decreasing partial matching (so d^2 = 0 holds automatically)."""
    gens = [(f"g{i}", rng.randint(-3, 3)) for i in range(size)]
    grading = dict(gens)
    ids = [g for g, _ in gens]
    rng.shuffle(ids)
    arrows = []
    used: set[str] = set()
    for src in ids:
        if src in used:
            continue
        targets = [t for t in ids
                   if t not in used and t != src and grading[t] < grading[src]]
        if targets and rng.random() < 0.7:
            dst = rng.choice(targets)
            arrows.append((src, dst))
            used.update((src, dst))
    return GradedComplex.build(name, gens, arrows)
