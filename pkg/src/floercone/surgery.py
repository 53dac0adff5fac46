"""Surgery formulas as executable GF(2) constructions.

Four computations live here:

* ``dual_knot_rank`` / ``dual_knot_table``: the rank of the dual-knot
  group after n-surgery, per Spin^c slot s, computed homologically as

      ell(C, s) + ell(C, n+1-s) + dim H(C) - 2 * restriction_rank(C, s, n+1-s)

  which is the homology of the two-arrow mapping cone pairing the two
  truncations against the full homology.  Reports group slots by residue
  mod |n| and carry a simplicity verdict when the ambient rank is given.

* ``integer_surgery_rank``: the integer-surgery mapping cone on a
  trivial-differential profile.  Copies A_s of the total space map to
  B-copies by v_s (identity on gradings >= s, into copy s) and by h_s
  (grading flip on gradings <= s, into copy s - n).  The cone is
  truncated to A-copies s in [-g-|n|-1, g+|n|+1] and B-copies
  t in [lo, hi-n]; outside that window every map component vanishes and
  the discarded part is a sum of acyclic pairs, so the finite matrix
  computes the full cone's homology rank exactly.

* ``build_d1``: the explicit one-step cone matrix on A-copies
  s in [-g, g] mapping to B-copies t in [-g, g+1]; its kernel dimension
  and rank feed the kernel-count and y_1 cross-checks.

* ``simple_blocks`` / ``cube_assemble``: the block presentations of the
  connecting maps of a simple knot's (-1)-surgery dual, and the rational
  surgery cube assembled from them.  ``assemble_mapping_cube`` lays out
  the cube for an arbitrary positive coprime slope (both the p >= q and
  q > p arrangements); a :class:`CubeInstance` carrying the original
  slope (p, q) is assembled at (p, p+q), the dual-knot route, which is
  the instantiation all rank identities concern:

      rank(d_cube) = q (2r + s) + p x,
      homology     = p h_inf + q (h_minus_one - h_inf).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .complexes import GradedComplex, ell, restriction_rank, total_homology_rank
from .gf2 import Gf2Matrix, compose_blocks, rank
from .ranks import RankVector, _coerce
from .spinc import cone_partner


# ---------------------------------------------------------------------
# Dual-knot cone ranks
# ---------------------------------------------------------------------


def dual_knot_rank(cx: GradedComplex, n: int, s: int) -> int:
    """Rank of the dual-knot group at Spin^c slot s after n-surgery."""
    partner = cone_partner(n, s)
    return (ell(cx, s) + ell(cx, partner) + total_homology_rank(cx)
            - 2 * restriction_rank(cx, s, partner))


def table_window(cx: GradedComplex, n: int) -> tuple[int, int] | None:
    """Interval outside which dual_knot_rank(cx, n, .) provably vanishes.

    Outside [min(minA, n+1-maxA) - 1, max(maxA, n+1-minA) + 1] one
    truncation is empty and the other is the whole complex, so the cone
    rank is 0 + h + h - 2h = 0.
    """
    lo_a, hi_a = cx.min_grading(), cx.max_grading()
    if lo_a is None or hi_a is None:
        return None
    return (min(lo_a, n + 1 - hi_a) - 1, max(hi_a, n + 1 - lo_a) + 1)


@dataclass(frozen=True)
class ConeReport:
    """Per-slot rank table for a dual knot, with residue grouping.

    ``per_s`` holds the nonzero entries only; ``total`` is their sum.
    ``by_class`` groups nonzero slots by residue mod |n| (absent for
    n = 0).  ``simple`` is present exactly when ``hf_rank`` is, and says
    whether total == hf_rank.
    """

    n: int
    per_s: dict[int, int]
    window: tuple[int, int] | None
    by_class: dict[int, list[tuple[int, int]]] | None
    total: int
    hf_rank: int | None = None
    simple: bool | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "window": list(self.window) if self.window is not None else None,
            "table": [[s, r] for s, r in sorted(self.per_s.items())],
            "classes": (None if self.by_class is None else
                        [[res, [[s, r] for s, r in rows]]
                         for res, rows in sorted(self.by_class.items())]),
            "total": self.total,
            "hf_rank": self.hf_rank,
            "simple": self.simple,
        }

    def to_tsv(self) -> str:
        lines = ["s\trank\tresidue"]
        for s, r in sorted(self.per_s.items()):
            residue = s % abs(self.n) if self.n != 0 else "-"
            lines.append(f"{s}\t{r}\t{residue}")
        return "\n".join(lines)


def _report_from_values(n: int, values: dict[int, int],
                        window: tuple[int, int] | None,
                        hf_rank: int | None) -> ConeReport:
    per_s = {s: r for s, r in sorted(values.items()) if r != 0}
    by_class: dict[int, list[tuple[int, int]]] | None = None
    if n != 0:
        by_class = {}
        for s, r in sorted(per_s.items()):
            by_class.setdefault(s % abs(n), []).append((s, r))
    total = sum(per_s.values())
    simple = None if hf_rank is None else (total == hf_rank)
    return ConeReport(n=n, per_s=per_s, window=window, by_class=by_class,
                      total=total, hf_rank=hf_rank, simple=simple)


def dual_knot_table(cx: GradedComplex, n: int, hf_rank: int | None = None) -> ConeReport:
    """Full per-slot table of dual_knot_rank over the provable window."""
    window = table_window(cx, n)
    values: dict[int, int] = {}
    if window is not None:
        for s in range(window[0], window[1] + 1):
            values[s] = dual_knot_rank(cx, n, s)
    return _report_from_values(n, values, window, hf_rank)


# ---------------------------------------------------------------------
# Integer-surgery mapping cone on trivial-differential profiles
# ---------------------------------------------------------------------


def _profile_gradings(profile: RankVector) -> list[int]:
    """Grading of each basis vector of the total space, ascending."""
    g = profile.genus_bound
    gradings = []
    for a in range(-g, g + 1):
        gradings.extend([a] * profile[a])
    return gradings


def _proj_ge(gradings: Sequence[int], s: int) -> Gf2Matrix:
    """Identity on basis vectors of grading >= s, zero elsewhere."""
    dim = len(gradings)
    bits = tuple((1 << i) if gradings[i] >= s else 0 for i in range(dim))
    return Gf2Matrix(dim, dim, bits)


def _flip_le(gradings: Sequence[int], s: int) -> Gf2Matrix:
    """Grading flip a -> -a on basis vectors of grading <= s, zero elsewhere.

    The i-th vector at grading a pairs with the i-th vector at grading -a
    (the profile is symmetric, so the counts match).
    """
    dim = len(gradings)
    slots: dict[int, list[int]] = {}
    for i, a in enumerate(gradings):
        slots.setdefault(a, []).append(i)
    bits = [0] * dim
    for a, idxs in slots.items():
        for offset, i in enumerate(idxs):
            if a <= s:
                j = slots[-a][offset]
                bits[j] |= 1 << i
    return Gf2Matrix(dim, dim, tuple(bits))


def integer_surgery_rank(profile: RankVector | Sequence[int], n: int) -> int:
    """Homology rank of the n-surgery mapping cone, trivial differential."""
    if n == 0:
        raise ValueError("n = 0 is rejected: the cone does not truncate")
    p = _coerce(profile)
    gradings = _profile_gradings(p)
    dim = len(gradings)
    if dim == 0:
        return 0
    g = p.genus_bound
    lo = -g - abs(n) - 1
    hi = g + abs(n) + 1
    a_slots = list(range(lo, hi + 1))
    b_slots = list(range(lo, hi - n + 1))
    b_index = {t: k for k, t in enumerate(b_slots)}
    placements = []
    for col, s in enumerate(a_slots):
        if s in b_index:
            placements.append((b_index[s] * dim, col * dim, _proj_ge(gradings, s)))
        if s - n in b_index:
            placements.append((b_index[s - n] * dim, col * dim, _flip_le(gradings, s)))
    d = compose_blocks(len(b_slots) * dim, len(a_slots) * dim, placements)
    total = (len(a_slots) + len(b_slots)) * dim
    return total - 2 * rank(d)


def build_d1(profile: RankVector | Sequence[int]) -> Gf2Matrix:
    """The one-step cone matrix on A-copies [-g, g] into B-copies [-g, g+1].

    Column copy s carries v_s (identity on gradings >= s) into row copy s
    and the grading flip on gradings <= s into row copy s + 1.  Its kernel
    dimension equals kernel_d1_size(profile) and
    (4g + 3) * h_inf - 2 * rank equals y_one(profile).
    """
    p = _coerce(profile)
    gradings = _profile_gradings(p)
    dim = len(gradings)
    g = p.genus_bound
    a_slots = list(range(-g, g + 1))
    b_slots = list(range(-g, g + 2))
    b_index = {t: k for k, t in enumerate(b_slots)}
    placements = []
    for col, s in enumerate(a_slots):
        placements.append((b_index[s] * dim, col * dim, _proj_ge(gradings, s)))
        placements.append((b_index[s + 1] * dim, col * dim, _flip_le(gradings, s)))
    return compose_blocks(len(b_slots) * dim, len(a_slots) * dim, placements)


def kernel_dim(m: Gf2Matrix) -> int:
    return m.cols - rank(m)


# ---------------------------------------------------------------------
# Simple-knot block maps and the rational surgery cube
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class SurgeryMaps:
    """The four connecting maps of a surgery triple, as matrices.

    ``phi``/``phibar`` map the infinite-slope group to the unit-slope
    group; ``psi``/``psibar`` map the unit-slope group to the zero-slope
    group.  The composites eta/etabar are derived.
    """

    phi: Gf2Matrix
    phibar: Gf2Matrix
    psi: Gf2Matrix
    psibar: Gf2Matrix

    def __post_init__(self) -> None:
        if (self.phi.rows, self.phi.cols) != (self.phibar.rows, self.phibar.cols):
            raise ValueError("phi and phibar must have equal shape")
        if (self.psi.rows, self.psi.cols) != (self.psibar.rows, self.psibar.cols):
            raise ValueError("psi and psibar must have equal shape")
        if self.psi.cols != self.phi.rows:
            raise ValueError("psi does not compose with phi")

    @property
    def dim_inf(self) -> int:
        return self.phi.cols

    @property
    def dim_one(self) -> int:
        return self.phi.rows

    @property
    def dim_zero(self) -> int:
        return self.psi.rows

    @property
    def eta(self) -> Gf2Matrix:
        return self.psi @ self.phi

    @property
    def etabar(self) -> Gf2Matrix:
        return self.psibar @ self.phibar


def _random_full_column_rank(rng: random.Random, rows: int, cols: int,
                             tries: int) -> Gf2Matrix:
    if cols == 0:
        return Gf2Matrix(rows, 0, (0,) * rows)
    for _ in range(tries):
        m = Gf2Matrix(rows, cols,
                      tuple(rng.getrandbits(cols) for _ in range(rows)))
        if rank(m) == cols:
            return m
    raise ValueError(f"could not sample a {rows}x{cols} injective matrix")


def _random_invertible(rng: random.Random, n: int, tries: int) -> Gf2Matrix:
    return _random_full_column_rank(rng, n, n, tries)


def simple_blocks(r: int, s: int, x: int, h0: int, seed: int = 0,
                  w: int | None = None, tries: int = 500) -> SurgeryMaps:
    """Sample the block presentations of a simple knot's connecting maps.

    phi    = [[I_r, 0,   0,   0], [0, I_s, 0, 0], [0, 0, 0,   0]]
    phibar = [[0,   0,   0,   0], [0, Xi,  0, 0], [0, 0, I_r, 0]]
    psi    = [Psi | 0 | 0],  psibar = [0 | 0 | Ups]

    with Xi a random invertible s x s matrix and Psi, Ups random injective
    h0 x r matrices satisfying rank([Psi | Ups]) = x.  The fourth column
    block has width w, by default 2x - h0 (the width forced by the
    homology identity); deterministic for fixed seed.
    """
    if r < 0 or s < 0 or h0 < 0:
        raise ValueError("block dimensions must be nonnegative")
    if h0 < r:
        raise ValueError(f"infeasible: h0 = {h0} < r = {r} (no injective maps)")
    if not (r <= x <= min(2 * r, h0)):
        raise ValueError(f"infeasible: x = {x} outside [{r}, {min(2 * r, h0)}]")
    if w is None:
        w = 2 * x - h0
    if w < 0:
        raise ValueError(
            f"infeasible: fourth block width 2x - h0 = {2 * x - h0} is negative"
        )
    rng = random.Random(seed)
    xi = _random_invertible(rng, s, tries)
    psi_block = _random_full_column_rank(rng, h0, r, tries)
    ups_block = _sample_partner(rng, psi_block, x, tries)

    dim_inf = 2 * r + s + w
    dim_one = 2 * r + s
    ident_r = Gf2Matrix.identity(r)
    phi = compose_blocks(dim_one, dim_inf, [(0, 0, ident_r),
                                            (r, r, Gf2Matrix.identity(s))])
    phibar = compose_blocks(dim_one, dim_inf, [(r, r, xi),
                                               (r + s, r + s, ident_r)])
    psi = compose_blocks(h0, dim_one, [(0, 0, psi_block)])
    psibar = compose_blocks(h0, dim_one, [(0, r + s, ups_block)])
    return SurgeryMaps(phi=phi, phibar=phibar, psi=psi, psibar=psibar)


def _sample_partner(rng: random.Random, base: Gf2Matrix, x: int,
                    tries: int) -> Gf2Matrix:
    """Random injective matrix of base's shape with rank([base | .]) = x."""
    h0, r = base.rows, base.cols
    if r == 0:
        return base
    # Extend base's column span to an x-dimensional ambient space, then
    # sample columns inside it until the ranks come out right.
    extension = None
    for _ in range(tries):
        ext = Gf2Matrix(h0, x - r, tuple(rng.getrandbits(x - r) for _ in range(h0))) \
            if x > r else Gf2Matrix(h0, 0, (0,) * h0)
        if rank(base.hstack(ext)) == x:
            extension = ext
            break
    if extension is None:
        raise ValueError("could not extend the span: h0 too small for x")
    ambient = base.hstack(extension)            # h0 x x, full column rank
    for _ in range(tries):
        coeffs = Gf2Matrix(x, r, tuple(rng.getrandbits(r) for _ in range(x)))
        candidate = ambient @ coeffs
        if rank(candidate) == r and rank(base.hstack(candidate)) == x:
            return candidate
    raise ValueError("could not sample the partner injection: h0 too small")


@dataclass(frozen=True)
class CubeInstance:
    """Connecting maps plus the original-knot slope p/q (positive coprime)."""

    p: int
    q: int
    maps: SurgeryMaps

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError("slope must have positive p and q")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not coprime")

    @property
    def dims(self) -> tuple[int, int, int]:
        """(copies of H_inf, H_1, H_0) in the assembled cube."""
        return (self.p + self.q, self.q, self.p)

    def total_dim(self) -> int:
        m = self.maps
        return ((self.p + self.q) * m.dim_inf + self.q * m.dim_one
                + self.p * m.dim_zero)


def assemble_mapping_cube(maps: SurgeryMaps, p: int, q: int) -> Gf2Matrix:
    """Square cube differential for the literal slope-(p, q) layout.

    The total space is q copies of the infinite-slope group, |p - q|
    copies of the unit-slope group, and p copies of the zero-slope group,
    in that order.  For p >= q the differential is eta/etabar out of the
    infinite copies and psi/psibar out of the unit copies; for q > p it
    is eta/etabar and phi/phibar, all out of the infinite copies:

        p >= q:  eta^i:    inf(i) -> zero(i + p - q)   i = 1..q
                 etabar^i: inf(i) -> zero(i)           i = 1..q
                 psi^j:    one(j) -> zero(j)           j = 1..p-q
                 psibar^j: one(j) -> zero(j + q)       j = 1..p-q

        q > p:   etabar^i: inf(i) -> zero(i)           i = 1..p
                 eta:      inf(i + q - p) -> zero(i)   i = 1..p
                 phi:      inf(j) -> one(j)            j = 1..q-p
                 phibar:   inf(j + p) -> one(j)        j = 1..q-p

    There are no composable pairs in either layout, so d^2 = 0 holds
    literally (asserted).
    """
    if p < 1 or q < 1:
        raise ValueError("cube slope must have positive p and q")
    if gcd(p, q) != 1:
        raise ValueError(f"cube slope {p}/{q} is not coprime")
    di, d1, d0 = maps.dim_inf, maps.dim_one, maps.dim_zero
    n_inf, n_one, n_zero = q, abs(p - q), p
    inf_off = 0
    one_off = n_inf * di
    zero_off = one_off + n_one * d1
    total = zero_off + n_zero * d0

    def inf(i: int) -> int:
        return inf_off + (i - 1) * di

    def one(j: int) -> int:
        return one_off + (j - 1) * d1

    def zero(i: int) -> int:
        return zero_off + (i - 1) * d0

    placements: list[tuple[int, int, Gf2Matrix]] = []
    eta, etabar = maps.eta, maps.etabar
    if p >= q:
        for i in range(1, q + 1):
            placements.append((zero(i + p - q), inf(i), eta))
            placements.append((zero(i), inf(i), etabar))
        for j in range(1, p - q + 1):
            placements.append((zero(j), one(j), maps.psi))
            placements.append((zero(j + q), one(j), maps.psibar))
    else:
        for i in range(1, p + 1):
            placements.append((zero(i), inf(i), etabar))
            placements.append((zero(i), inf(i + q - p), eta))
        for j in range(1, q - p + 1):
            placements.append((one(j), inf(j), maps.phi))
            placements.append((one(j), inf(j + p), maps.phibar))
    d = compose_blocks(total, total, placements)
    if not (d @ d).is_zero():
        raise AssertionError("cube differential violates d^2 = 0")
    return d


def cube_assemble(inst: CubeInstance) -> Gf2Matrix:
    """Cube differential for the instance, assembled at slope (p, p + q)."""
    return assemble_mapping_cube(inst.maps, inst.p, inst.p + inst.q)


def cube_homology_rank(inst: CubeInstance) -> int:
    d = cube_assemble(inst)
    return d.rows - 2 * rank(d)
