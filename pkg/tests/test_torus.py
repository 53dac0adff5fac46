import pytest

from floercone.complexes import ell, total_homology_rank, validate
from floercone.surgery import dual_knot_rank
from floercone.torus import (ScanRow, ell_closed, hm_rank_closed, scan_to_tsv,
                             simple_scan, staircase, torus_report)


def test_staircase_structure_n1():
    cx = staircase(1)
    assert [a for _, a in cx.generators] == [1, 0, -1]
    assert cx.arrows == frozenset({("x0", "x-1")})
    assert validate(cx) == []


def test_staircase_structure_n2():
    cx = staircase(2)
    assert [a for _, a in cx.generators] == [2, 1, 0, -1, -2]
    arrow_gradings = sorted((dict(cx.generators)[s], dict(cx.generators)[d])
                            for s, d in cx.arrows)
    assert arrow_gradings == [(-1, -2), (1, 0)]


def test_staircase_homology_rank_one():
    for n in range(1, 9):
        cx = staircase(n)
        assert cx.size == 2 * n + 1
        assert len(cx.arrows) == n
        assert total_homology_rank(cx) == 1


def test_staircase_rejects_zero():
    with pytest.raises(ValueError, match="n must be >= 1"):
        staircase(0)


def test_ell_closed_examples():
    assert ell_closed(1, 0) == 2
    assert ell_closed(1, 2) == 0
    assert ell_closed(3, -5) == 1


def test_ell_closed_matches_engine():
    for n in range(1, 9):
        cx = staircase(n)
        for s in range(-n - 2, n + 3):
            assert ell_closed(n, s) == ell(cx, s), (n, s)


def test_hm_rank_closed_examples():
    assert hm_rank_closed(1, 5, 0) == 1
    assert hm_rank_closed(1, 5, -3) == 0
    assert hm_rank_closed(2, 5, 3) == 1


def test_hm_rank_closed_partner_symmetry():
    for n in range(1, 5):
        for m in range(-5, 10):
            for s in range(-8, 12):
                assert hm_rank_closed(n, m, s) == hm_rank_closed(n, m, m + 1 - s)


def test_hm_rank_closed_matches_engine_sample():
    for n in (1, 2, 3):
        cx = staircase(n)
        for m in (-3, -1, 0, 1, 4, 9):
            for s in range(-n - 4, n + abs(m) + 5):
                assert hm_rank_closed(n, m, s) == dual_knot_rank(cx, m, s), (n, m, s)


def test_torus_report_simple_lens():
    report = torus_report(1, 5)
    assert report.total == 5
    assert report.hf_rank == 5
    assert report.simple is True
    assert sorted(report.per_s) == [0, 2, 3, 4, 6]


def test_torus_report_boundary_m():
    report = torus_report(1, 1, hf_rank=1)
    assert report.total == 3 == 1 + 2
    assert report.simple is False
    report = torus_report(2, 3)
    assert report.total == 5 == 3 + 2
    assert report.simple is False


def test_torus_report_refuses_default_verdict_below_range():
    report = torus_report(2, 2)     # m < 2n - 1 = 3 and no hf_rank
    assert report.hf_rank is None
    assert report.simple is None
    assert report.total == sum(report.per_s.values())


def test_torus_report_negative_m_table_only():
    report = torus_report(1, -4)
    assert report.hf_rank is None and report.simple is None
    assert report.total == sum(report.per_s.values()) > 0


def test_torus_report_explicit_hf():
    report = torus_report(2, 2, hf_rank=6)
    assert report.simple == (report.total == 6)


def test_distinct_residues_for_odd_m():
    for n in range(1, 5):
        for m in range(2 * n + 1, 2 * n + 12, 2):
            report = torus_report(n, m)
            assert report.simple is True
            for rows in report.by_class.values():
                assert len(rows) == 1


def test_simple_scan_rows():
    rows = simple_scan(2, 8)
    assert rows[0] == ScanRow(n=1, m=1, total=3, hf_rank=1, simple=False)
    by_key = {(r.n, r.m): r for r in rows}
    assert by_key[(1, 2)].total == 2 and by_key[(1, 2)].simple is True
    for r in rows:
        if r.m >= 2 * r.n and r.m % 2 == 1:
            assert r.simple is True
        if r.m == 2 * r.n - 1:
            assert r.total == r.m + 2


def test_simple_scan_tsv_format():
    tsv = scan_to_tsv(simple_scan(1, 3))
    lines = tsv.splitlines()
    assert lines[0] == "n\tm\ttotal\thf\tsimple"
    assert lines[1] == "1\t1\t3\t1\tfalse"
    assert lines[3] == "1\t3\t3\t3\ttrue"


def test_simple_scan_bounds():
    with pytest.raises(ValueError, match=">= 1"):
        simple_scan(0, 5)
