"""Alexander-graded chain complexes over GF(2).

A :class:`GradedComplex` is a finite set of named generators with integer
Alexander gradings and a set of arrows, each arrow meaning a differential
coefficient 1 from source to target.  Arrows never increase the grading
(they strictly decrease it for all the surgery-facing complexes; the one
exception is a fixture whose internal differential acts within a single
grading, which is why equality of gradings is tolerated).

The central construction is :func:`truncate_ge`: the quotient complex
spanned by the generators of grading >= s, with arrows whose endpoints
both survive.  Because dropped arrows only point below the cut, the
quotient is again a complex, and its homology rank :func:`ell` is the
truncated-homology rank that feeds every surgery formula downstream.

The on-disk format is a single JSON document::

    { "name": "...",
      "generators": [ { "id": "a", "alexander": 1 }, ... ],
      "arrows": [ ["a", "b"], ... ] }

Unknown fields and duplicate arrows are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .gf2 import Gf2Matrix, homology_rank, induced_homology_map_rank


@dataclass(frozen=True)
class GradedComplex:
    """Finitely generated complex with integer Alexander gradings.

    ``generators`` is an ordered tuple of (id, alexander) pairs; the order
    fixes the basis used by :meth:`differential`.  ``arrows`` is a set of
    (src_id, dst_id) pairs with implicit coefficient 1.
    """

    name: str
    generators: tuple[tuple[str, int], ...]
    arrows: frozenset[tuple[str, str]]

    @staticmethod
    def build(name: str,
              generators: Sequence[tuple[str, int]],
              arrows: Sequence[tuple[str, str]] = ()) -> GradedComplex:
        return GradedComplex(name, tuple((str(i), int(a)) for i, a in generators),
                             frozenset((str(s), str(d)) for s, d in arrows))

    # -- basic views ---------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.generators)

    def grading(self) -> dict[str, int]:
        return {gid: a for gid, a in self.generators}

    def index(self) -> dict[str, int]:
        return {gid: i for i, (gid, _) in enumerate(self.generators)}

    def min_grading(self) -> int | None:
        return min((a for _, a in self.generators), default=None)

    def max_grading(self) -> int | None:
        return max((a for _, a in self.generators), default=None)

    def differential(self) -> Gf2Matrix:
        """Differential as a matrix acting on column vectors.

        Entry (row=dst, col=src) is 1 for each arrow src -> dst.
        """
        idx = self.index()
        bits = [0] * self.size
        for src, dst in self.arrows:
            bits[idx[dst]] |= 1 << idx[src]
        return Gf2Matrix(self.size, self.size, tuple(bits))


def validate(cx: GradedComplex) -> list[str]:
    """All invariant violations, as human-readable strings (empty = ok)."""
    errors: list[str] = []
    seen: set[str] = set()
    for gid, _ in cx.generators:
        if gid in seen:
            errors.append(f"duplicate generator id {gid!r}")
        seen.add(gid)
    grading = cx.grading()
    for src, dst in sorted(cx.arrows):
        if src not in grading:
            errors.append(f"arrow source {src!r} is not a generator")
            continue
        if dst not in grading:
            errors.append(f"arrow target {dst!r} is not a generator")
            continue
        if grading[dst] > grading[src]:
            errors.append(
                f"arrow must strictly decrease grading: {src!r} (A={grading[src]}) "
                f"-> {dst!r} (A={grading[dst]})"
            )
    if not errors:
        d = cx.differential()
        if not (d @ d).is_zero():
            errors.append("d^2 != 0")
    return errors


def require_valid(cx: GradedComplex) -> GradedComplex:
    errors = validate(cx)
    if errors:
        raise ValueError("invalid complex: " + "; ".join(errors))
    return cx


# -- truncation and homology ------------------------------------------


def truncate_ge(cx: GradedComplex, s: int) -> GradedComplex:
    """Quotient complex spanned by generators of Alexander grading >= s.

    Arrows are kept iff both endpoints survive.  Dropped arrows only point
    below the cut, so d^2 = 0 is preserved.
    """
    keep = tuple((gid, a) for gid, a in cx.generators if a >= s)
    kept_ids = {gid for gid, _ in keep}
    arrows = frozenset((a, b) for a, b in cx.arrows if a in kept_ids and b in kept_ids)
    return GradedComplex(cx.name, keep, arrows)


def total_homology_rank(cx: GradedComplex) -> int:
    return homology_rank(cx.differential())


def ell(cx: GradedComplex, s: int) -> int:
    """Homology rank of the grading->=s quotient."""
    return total_homology_rank(truncate_ge(cx, s))


def projection_matrix(cx: GradedComplex, sub: GradedComplex) -> Gf2Matrix:
    """Matrix of the projection chain map cx -> sub (a truncation of cx)."""
    idx = cx.index()
    bits = [0] * sub.size
    for i, (gid, _) in enumerate(sub.generators):
        bits[i] = 1 << idx[gid]
    return Gf2Matrix(sub.size, cx.size, tuple(bits))


def restriction_rank(cx: GradedComplex, s1: int, s2: int) -> int:
    """Rank of H(cx) -> H(T_{s1}) + H(T_{s2}) induced by the two projections."""
    t1 = truncate_ge(cx, s1)
    t2 = truncate_ge(cx, s2)
    f = projection_matrix(cx, t1).vstack(projection_matrix(cx, t2))
    d_target = _block_diag(t1.differential(), t2.differential())
    return induced_homology_map_rank(cx.differential(), d_target, f)


def _block_diag(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    top = a.hstack(Gf2Matrix.zero(a.rows, b.cols))
    bottom = Gf2Matrix.zero(b.rows, a.cols).hstack(b)
    return top.vstack(bottom)


def dualize(cx: GradedComplex) -> GradedComplex:
    """Reverse every arrow and negate every grading.

    An involution on the nose: generators keep their ids, and applying
    dualize twice restores gradings and arrows exactly.
    """
    gens = tuple((gid, -a) for gid, a in cx.generators)
    arrows = frozenset((dst, src) for src, dst in cx.arrows)
    return GradedComplex(cx.name, gens, arrows)


def complex_from_profile(profile: Sequence[int], name: str | None = None) -> GradedComplex:
    """Trivial-differential complex with the symmetric rank profile.

    ``profile`` lists ranks at gradings 0..g; grading -j gets the same rank
    as grading +j.
    """
    if name is None:
        name = "profile(" + ",".join(str(v) for v in profile) + ")"
    gens: list[tuple[str, int]] = []
    g = len(profile) - 1
    for a in range(-g, g + 1):
        for i in range(profile[abs(a)]):
            gens.append((f"g{a}_{i}", a))
    return GradedComplex(name, tuple(gens), frozenset())


# -- JSON interchange ---------------------------------------------------


def complex_to_dict(cx: GradedComplex) -> dict:
    return {
        "name": cx.name,
        "generators": [{"id": gid, "alexander": a} for gid, a in cx.generators],
        "arrows": sorted([src, dst] for src, dst in cx.arrows),
    }


def complex_from_dict(doc: Mapping) -> GradedComplex:
    """Parse and validate the knot-complex document format."""
    if not isinstance(doc, Mapping):
        raise ValueError("complex document must be a JSON object")
    unknown = set(doc) - {"name", "generators", "arrows"}
    if unknown:
        raise ValueError(f"unknown fields in complex document: {sorted(unknown)}")
    for field in ("name", "generators", "arrows"):
        if field not in doc:
            raise ValueError(f"complex document is missing {field!r}")
    if not isinstance(doc["name"], str):
        raise ValueError("name must be a string")
    gens: list[tuple[str, int]] = []
    for entry in doc["generators"]:
        if not isinstance(entry, Mapping) or set(entry) != {"id", "alexander"}:
            raise ValueError(f"malformed generator entry: {entry!r}")
        gid, a = entry["id"], entry["alexander"]
        if not isinstance(gid, str) or not isinstance(a, int) or isinstance(a, bool):
            raise ValueError(f"malformed generator entry: {entry!r}")
        gens.append((gid, a))
    arrows: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for pair in doc["arrows"]:
        if (not isinstance(pair, Sequence) or isinstance(pair, str) or len(pair) != 2
                or not all(isinstance(x, str) for x in pair)):
            raise ValueError(f"malformed arrow entry: {pair!r}")
        arrow = (pair[0], pair[1])
        if arrow in seen:
            raise ValueError(f"duplicate arrow {list(arrow)!r}")
        seen.add(arrow)
        arrows.append(arrow)
    cx = GradedComplex.build(doc["name"], gens, arrows)
    return require_valid(cx)
