"""Closed-form rank formulas on trivial-differential rank profiles.

A :class:`RankVector` records the ranks l_0, ..., l_g of a knot complex
with vanishing differential, graded by the Alexander grading; grading -j
carries the same rank as grading +j, so only the nonnegative half is
stored.  The formulas below are the closed forms of the surgery rank
bookkeeping:

    h_inf        = l_0 + 2 (l_1 + ... + l_g)
    h_minus_one  = l_0 + 4 * sum j l_j
    y_one        = l_0 + 2 * sum (2j - 1) l_j
    ker d_1 size = 2 * sum (j - 1) l_j
    y_{p/q}      = p h_inf + q (h_minus_one - h_inf)

and the simplicity gap h_minus_one - y_one = 2 * sum_{j>=1} l_j, which
vanishes exactly for genus-zero profiles.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .spinc import FramedSlope


class ProfileWarning(UserWarning):
    """Soft invariant violations on rank profiles."""


@dataclass(frozen=True)
class RankVector:
    """Symmetric rank profile l_0..l_g; l_g >= 1 whenever g > 0."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("rank vector needs at least the grading-0 entry")
        if any(v < 0 for v in self.entries):
            raise ValueError("ranks must be nonnegative")
        if len(self.entries) > 1 and self.entries[-1] == 0:
            raise ValueError("top entry must be nonzero (trailing zeros are rejected)")
        if self.entries[0] == 0:
            warnings.warn("grading-0 rank is 0; knot-like profiles have l_0 >= 1",
                          ProfileWarning, stacklevel=2)

    @staticmethod
    def of(values: Iterable[int]) -> RankVector:
        return RankVector(tuple(int(v) for v in values))

    @property
    def genus_bound(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, j: int) -> int:
        """Rank at grading j (symmetric in j; zero beyond the profile)."""
        j = abs(j)
        return self.entries[j] if j <= self.genus_bound else 0

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)


def parse_rank_vector(text: str) -> RankVector:
    """Parse the CLI text form "l_0,l_1,...,l_g"."""
    try:
        values = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed rank vector {text!r}") from None
    return RankVector.of(values)


def _coerce(profile: RankVector | Sequence[int]) -> RankVector:
    return profile if isinstance(profile, RankVector) else RankVector.of(profile)


def h_inf(profile: RankVector | Sequence[int]) -> int:
    """Total rank of the profile: l_0 + 2 * sum_{j>=1} l_j."""
    p = _coerce(profile)
    return p.entries[0] + 2 * sum(p.entries[1:])


def h_minus_one(profile: RankVector | Sequence[int]) -> int:
    """Total dual-knot rank under (-1)-surgery: l_0 + 4 * sum j l_j."""
    p = _coerce(profile)
    return p.entries[0] + 4 * sum(j * v for j, v in enumerate(p.entries))


def y_one(profile: RankVector | Sequence[int]) -> int:
    """Ambient rank after +1 surgery: l_0 + 2 * sum (2j - 1) l_j."""
    p = _coerce(profile)
    return p.entries[0] + 2 * sum((2 * j - 1) * v for j, v in enumerate(p.entries) if j >= 1)


def kernel_d1_size(profile: RankVector | Sequence[int]) -> int:
    """Kernel dimension of the +1-surgery cone map: 2 * sum (j - 1) l_j."""
    p = _coerce(profile)
    return 2 * sum((j - 1) * v for j, v in enumerate(p.entries) if j >= 1)


def genus(profile: RankVector | Sequence[int]) -> int:
    """Largest grading with nonzero rank (the Seifert genus detector)."""
    p = _coerce(profile)
    if all(v == 0 for v in p.entries):
        raise ValueError("genus of the all-zero profile is undefined")
    return max(j for j, v in enumerate(p.entries) if v != 0)


def y_pq_from_h(h_infinity: int, h_minus: int, p: int, q: int) -> int:
    """p/q-surgery rank from the two total ranks: p*h_inf + q*(h_-1 - h_inf)."""
    return p * h_infinity + q * (h_minus - h_infinity)


def y_pq(profile: RankVector | Sequence[int], slope: FramedSlope | tuple[int, int]) -> int:
    """Rank of the ambient invariant after p/q surgery (p, q >= 1 coprime)."""
    if isinstance(slope, tuple):
        slope = FramedSlope(*slope)
    if slope.is_infinite:
        return h_inf(profile)
    if slope.p < 1 or slope.q < 1:
        raise ValueError("y_pq needs positive p and q")
    if gcd(slope.p, slope.q) != 1:
        raise ValueError(f"slope {slope} is not coprime")
    p_ = _coerce(profile)
    return y_pq_from_h(h_inf(p_), h_minus_one(p_), slope.p, slope.q)


def simplicity_gap(profile: RankVector | Sequence[int]) -> int:
    """h_minus_one - y_one = 2 * sum_{j>=1} l_j; zero iff genus zero."""
    p = _coerce(profile)
    return h_minus_one(p) - y_one(p)


@dataclass(frozen=True)
class SimpleSurgeryParams:
    """Block dimensions (r, s, x, w) of the simple-knot surgery matrices.

    r = sum_{j>=1} l_j and s = l_0 split the total rank as 2r + s; w is the
    dimension of the fourth column block of the connecting maps; x is the
    rank of the stacked pair of injections into the 0-surgery group.
    """

    r: int
    s: int
    x: int
    w: int


def surgery_params(profile: RankVector | Sequence[int], h0: int) -> SimpleSurgeryParams:
    """Derive (r, s, x, w) from a profile and the 0-surgery total rank h0.

    x is recovered from h_inf = h_minus_one + h0 - 2x and must land in
    [r, min(2r, h0)]; a parity failure or an out-of-range x signals an
    inconsistent h0.
    """
    p = _coerce(profile)
    r = sum(p.entries[1:])
    s = p.entries[0]
    hm = h_minus_one(p)
    w = hm - 2 * r - s
    if h0 < 0:
        raise ValueError("h0 must be nonnegative")
    twice_x = hm + h0 - h_inf(p)
    if twice_x % 2 != 0:
        raise ValueError(f"parity violation: h_minus_one + h0 - h_inf = {twice_x} is odd")
    x = twice_x // 2
    if not (r <= x <= min(2 * r, h0)):
        raise ValueError(
            f"x = {x} outside admissible range [{r}, {min(2 * r, h0)}]: inconsistent h0"
        )
    return SimpleSurgeryParams(r=r, s=s, x=x, w=w)
