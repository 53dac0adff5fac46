"""The Borromean dual-knot fixture: the counterexample regression.

Sixteen winding-region generators, indexed (x, y, z) with x in 1..5 and
y, z in 1..6, split by grading into twelve at 0, three at +1 and one at
-1.  The grading-0 piece carries five differentials; its homology has
rank 2, so the total rank is 1 + 2 + 1 = 4, while the closed-form
prediction for the profile (2, 1) is 6.  The discrepancy is the point:
the ambient manifold has positive first Betti number, outside the
homology-sphere hypothesis of the closed forms.

The fifth arrow is (1,4,5) -> (2,3,5): the small rectangle with corners
x1, x2, y4, y3 connects (1,4,k) to (2,3,k), and k = 5 is the unique
choice with both endpoints in the grading-0 list.  Without it the
grading-0 homology would have rank 4 instead of 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import GradedComplex, total_homology_rank
from .ranks import h_minus_one

_GRADING_ZERO = (
    (1, 4, 5), (1, 5, 4), (2, 1, 6), (2, 2, 6), (2, 3, 5), (3, 3, 1),
    (3, 3, 2), (4, 1, 3), (4, 2, 3), (5, 5, 3), (5, 6, 1), (5, 6, 2),
)
_GRADING_PLUS = ((1, 4, 4), (2, 3, 4), (5, 4, 3))
_GRADING_MINUS = ((1, 5, 5),)

_ARROWS = (
    ((3, 3, 2), (3, 3, 1)),
    ((5, 6, 2), (5, 6, 1)),
    ((2, 2, 6), (2, 1, 6)),
    ((4, 2, 3), (4, 1, 3)),
    ((1, 4, 5), (2, 3, 5)),
)

# Ranks at gradings +1/-1 are recorded data (one each, by conjugation
# symmetry from the single grading -1 generator); the differential within
# the grading +1 triple is not modeled.
_RANKS_BY_GRADING = {-1: 1, 0: 2, 1: 1}

_PROFILE = (2, 1)


@dataclass(frozen=True)
class BorromeanGenerator:
    x: int
    y: int
    z: int
    h: int

    def __post_init__(self) -> None:
        if not (1 <= self.x <= 5 and 1 <= self.y <= 6 and 1 <= self.z <= 6):
            raise ValueError("generator indices out of range")
        if self.h not in (-1, 0, 1):
            raise ValueError("grading must be -1, 0 or +1")


def generators() -> list[BorromeanGenerator]:
    """All sixteen winding-region generators with their gradings."""
    out = [BorromeanGenerator(x, y, z, 0) for x, y, z in _GRADING_ZERO]
    out += [BorromeanGenerator(x, y, z, 1) for x, y, z in _GRADING_PLUS]
    out += [BorromeanGenerator(x, y, z, -1) for x, y, z in _GRADING_MINUS]
    return out


def _gen_id(triple: tuple[int, int, int]) -> str:
    return "x{}y{}z{}".format(*triple)


def fixture() -> GradedComplex:
    """The twelve-generator grading-0 complex with its five arrows."""
    gens = [(_gen_id(t), 0) for t in _GRADING_ZERO]
    arrows = [(_gen_id(src), _gen_id(dst)) for src, dst in _ARROWS]
    return GradedComplex.build("borromean-dual-grading0", gens, arrows)


def grading_zero_rank() -> int:
    """Homology rank of the grading-0 piece (= 2)."""
    return total_homology_rank(fixture())


@dataclass(frozen=True)
class BorromeanReport:
    ranks_by_grading: dict[int, int]
    total: int
    prediction: int
    discrepancy: bool
    note: str

    def to_dict(self) -> dict:
        return {
            "ranks_by_grading": [[h, r] for h, r in sorted(self.ranks_by_grading.items())],
            "total": self.total,
            "prediction": self.prediction,
            "discrepancy": self.discrepancy,
            "note": self.note,
        }


def report() -> BorromeanReport:
    """Measured ranks vs. the closed-form prediction for profile (2, 1)."""
    ranks = dict(_RANKS_BY_GRADING)
    ranks[0] = grading_zero_rank()
    total = sum(ranks.values())
    prediction = h_minus_one(_PROFILE)
    return BorromeanReport(
        ranks_by_grading=ranks,
        total=total,
        prediction=prediction,
        discrepancy=total != prediction,
        note=("ambient manifold has b_1 > 0: the homology-sphere closed forms "
              "do not apply, and the measured total differs from the prediction"),
    )
