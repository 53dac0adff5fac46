"""The T(2, 2n+1) torus-knot family: staircases and closed-form ranks.

The staircase complex for T(2, 2n+1) has 2n+1 generators at Alexander
gradings n, n-1, ..., -n and n arrows, from grading n-2i+1 down to
grading n-2i for i = 1..n.  Its truncated-homology rank has the closed
form ``ell_closed``, and the dual-knot rank after m-surgery has the
closed form ``hm_rank_closed``; both are cross-checked against the
generic engine on every report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import GradedComplex
from .surgery import ConeReport, _report_from_values, dual_knot_rank, table_window


def staircase(n: int) -> GradedComplex:
    """Staircase complex of T(2, 2n+1); total homology rank 1."""
    if n < 1:
        raise ValueError("n must be >= 1 (use a one-generator complex for the unknot)")
    gens = [(f"x{a}", a) for a in range(n, -n - 1, -1)]
    arrows = [(f"x{n - 2 * i + 1}", f"x{n - 2 * i}") for i in range(1, n + 1)]
    return GradedComplex.build(f"T(2,{2 * n + 1})", gens, arrows)


def ell_closed(n: int, s: int) -> int:
    """Truncated-homology rank of the staircase: 0 if s > n, 2 if |s| <= n
    with s - n odd, and 1 otherwise."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if s > n:
        return 0
    if abs(s) <= n and (s - n) % 2 != 0:
        return 2
    return 1


def hm_rank_closed(n: int, m: int, s: int) -> int:
    """Dual-knot rank after m-surgery at slot s: |ell(s) + ell(m+1-s) - 1|."""
    return abs(ell_closed(n, s) + ell_closed(n, m + 1 - s) - 1)


def torus_report(n: int, m: int, hf_rank: int | None = None) -> ConeReport:
    """Per-slot rank table for the dual of T(2, 2n+1) after m-surgery.

    Every slot is computed both in closed form and through the homological
    engine; a disagreement raises.  When hf_rank is omitted it defaults to
    m, which is only legitimate in the L-space range m >= 2n - 1; for
    smaller m the report carries no verdict.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cx = staircase(n)
    window = table_window(cx, m)
    assert window is not None
    values: dict[int, int] = {}
    for s in range(window[0], window[1] + 1):
        closed = hm_rank_closed(n, m, s)
        engine = dual_knot_rank(cx, m, s)
        if closed != engine:
            raise AssertionError(
                f"closed form disagrees with engine at (n={n}, m={m}, s={s}): "
                f"{closed} != {engine}"
            )
        values[s] = closed
    if hf_rank is None and m >= 2 * n - 1:
        hf_rank = m
    return _report_from_values(m, values, window, hf_rank)


@dataclass(frozen=True)
class ScanRow:
    n: int
    m: int
    total: int
    hf_rank: int
    simple: bool


def simple_scan(n_max: int, m_max: int) -> list[ScanRow]:
    """Simplicity verdicts for 1 <= n <= n_max, 2n-1 <= m <= m_max."""
    if n_max < 1 or m_max < 1:
        raise ValueError("scan bounds must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        for m in range(2 * n - 1, m_max + 1):
            report = torus_report(n, m)
            assert report.hf_rank is not None and report.simple is not None
            rows.append(ScanRow(n=n, m=m, total=report.total,
                                hf_rank=report.hf_rank, simple=report.simple))
    return rows


def scan_to_tsv(rows: list[ScanRow]) -> str:
    lines = ["n\tm\ttotal\thf\tsimple"]
    for row in rows:
        simple = "true" if row.simple else "false"
        lines.append(f"{row.n}\t{row.m}\t{row.total}\t{row.hf_rank}\t{simple}")
    return "\n".join(lines)
