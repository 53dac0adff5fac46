"""Integer coordinates for relative Spin^c structures of a framed knot.

For knots in homology spheres the relative Spin^c structures are an
affine copy of the integers, so everything here is plain integer
arithmetic: the conjugation involution, the mapping-cone partner
threshold, and reduction modulo a surgery coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def conj(s: int) -> int:
    """Conjugation involution in integer coordinates: s -> -s."""
    return -s


def cone_partner(n: int, s: int) -> int:
    """Second truncation threshold of the n-surgery cone at slot s.

    The cone at slot s pairs the grading->=s truncation with the
    grading->=(n+1-s) truncation; this returns n + 1 - s.
    """
    return n + 1 - s


@dataclass(frozen=True)
class SpinCQuotient:
    """Residue classes of Spin^c slots modulo a surgery coefficient."""

    m: int

    def __post_init__(self) -> None:
        if self.m == 0:
            raise ValueError("zero modulus")


def reduce_mod(s: int, quotient: SpinCQuotient | int) -> int:
    """Residue of s in [0, |m|)."""
    m = quotient.m if isinstance(quotient, SpinCQuotient) else int(quotient)
    if m == 0:
        raise ValueError("zero modulus")
    return s % abs(m)


@dataclass(frozen=True)
class FramedSlope:
    """A p/q surgery slope; q >= 1 with gcd(|p|, q) = 1.

    The meridional (infinite) slope is the distinguished value
    ``FramedSlope.infinity()``, encoded as 1/0.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q == 0:
            if self.p != 1:
                raise ValueError("infinite slope must be encoded as 1/0")
            return
        if self.q < 1:
            raise ValueError("q must be positive")
        if gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not coprime")

    @staticmethod
    def infinity() -> FramedSlope:
        return FramedSlope(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @staticmethod
    def integer(n: int) -> FramedSlope:
        return FramedSlope(n, 1)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.p}/{self.q}"
