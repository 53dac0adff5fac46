import json
import random

import pytest

from floercone.complexes import (GradedComplex, complex_from_dict,
                                 complex_from_profile, complex_to_dict, dualize,
                                 ell, projection_matrix, restriction_rank,
                                 total_homology_rank, truncate_ge, validate)
from floercone.gf2 import Gf2Matrix
from floercone.torus import staircase
from conftest import random_matching_complex
from oracles import brute_homology_rank, brute_induced_rank, complex_rows


def test_validate_empty_ok():
    assert validate(GradedComplex.build("empty", [])) == []


def test_validate_single_arrow_ok():
    cx = GradedComplex.build("c", [("a", 1), ("b", 0)], [("a", "b")])
    assert validate(cx) == []


def test_validate_increasing_arrow_rejected():
    cx = GradedComplex.build("c", [("a", 0), ("b", 1)], [("a", "b")])
    errors = validate(cx)
    assert any("arrow must strictly decrease grading" in e for e in errors)


def test_validate_duplicate_ids():
    cx = GradedComplex.build("c", [("a", 0), ("a", 1)])
    assert any("duplicate generator id" in e for e in validate(cx))


def test_validate_dangling_arrow():
    cx = GradedComplex.build("c", [("a", 1)], [("a", "ghost")])
    assert any("not a generator" in e for e in validate(cx))


def test_validate_d_squared():
    cx = GradedComplex.build(
        "c", [("a", 2), ("b", 1), ("c", 0)], [("a", "b"), ("b", "c")])
    assert any("d^2" in e for e in validate(cx))


def test_differential_matrix_shape():
    cx = GradedComplex.build("c", [("a", 1), ("b", 0)], [("a", "b")])
    d = cx.differential()
    assert d[1, 0] == 1 and d[0, 0] == 0 and d[0, 1] == 0


# -- truncation ---------------------------------------------------------


def test_truncate_staircase_at_zero():
    t = truncate_ge(staircase(1), 0)
    assert [a for _, a in t.generators] == [1, 0]
    assert t.arrows == frozenset()


def test_truncate_below_min_is_identity():
    cx = staircase(2)
    assert truncate_ge(cx, -5) == cx


def test_truncate_above_max_is_empty():
    t = truncate_ge(staircase(2), 3)
    assert t.size == 0 and t.arrows == frozenset()


def test_truncation_composition_law():
    rng = random.Random(5)
    for _ in range(20):
        cx = random_matching_complex(rng, rng.randint(0, 8))
        for s in range(-4, 5):
            for t in range(-4, 5):
                assert truncate_ge(truncate_ge(cx, s), t) == truncate_ge(cx, max(s, t))


def test_truncations_stay_valid():
    rng = random.Random(6)
    for _ in range(20):
        cx = random_matching_complex(rng, rng.randint(0, 8))
        for s in range(-4, 5):
            assert validate(truncate_ge(cx, s)) == []


# -- homology of truncations --------------------------------------------


def test_ell_staircase_table():
    cx = staircase(1)
    assert ell(cx, 0) == 2
    assert ell(cx, 1) == 1
    assert ell(cx, 2) == 0


def test_ell_stabilizes():
    cx = staircase(3)
    h = total_homology_rank(cx)
    assert ell(cx, -3) == h == 1
    assert ell(cx, -10) == h
    assert ell(cx, 10) == 0


def test_ell_local_change_bound():
    rng = random.Random(9)
    for _ in range(20):
        cx = random_matching_complex(rng, rng.randint(1, 8))
        count = {a: 0 for a in range(-4, 5)}
        for _, a in cx.generators:
            count[a] += 1
        for s in range(-4, 4):
            assert abs(ell(cx, s) - ell(cx, s + 1)) <= count.get(s, 0)


def test_total_homology_trivial_and_staircases():
    assert total_homology_rank(complex_from_profile((2, 1))) == 4
    assert total_homology_rank(staircase(1)) == 1
    # T(2,5), frozen against the enumeration oracle
    cx = staircase(2)
    rows, n = complex_rows(cx)
    assert brute_homology_rank(rows, n) == 1
    assert total_homology_rank(cx) == 1


# -- restriction ranks ---------------------------------------------------


def test_restriction_rank_staircase_example():
    # Frozen from the enumeration oracle below: the top class survives
    # projection onto the grading->=0 quotient, rank 1.
    cx = staircase(1)
    t1 = truncate_ge(cx, 0)
    f = projection_matrix(cx, t1)
    oracle = brute_induced_rank(list(cx.differential().row_bits), 3,
                                list(t1.differential().row_bits), 2,
                                list(f.row_bits))
    assert oracle == 1
    assert restriction_rank(cx, 0, 2) == 1


def test_restriction_rank_empty_truncations():
    assert restriction_rank(staircase(2), 7, 9) == 0


def test_restriction_rank_at_min_is_full():
    for n in (1, 2, 3):
        cx = staircase(n)
        assert restriction_rank(cx, -n, -n) == total_homology_rank(cx)


def test_restriction_rank_symmetric():
    rng = random.Random(21)
    for _ in range(15):
        cx = random_matching_complex(rng, rng.randint(1, 7))
        s1, s2 = rng.randint(-4, 4), rng.randint(-4, 4)
        assert restriction_rank(cx, s1, s2) == restriction_rank(cx, s2, s1)


def test_restriction_rank_upper_bounds():
    rng = random.Random(27)
    for _ in range(15):
        cx = random_matching_complex(rng, rng.randint(1, 7))
        s1, s2 = rng.randint(-3, 3), rng.randint(-3, 3)
        r = restriction_rank(cx, s1, s2)
        assert 0 <= r <= min(total_homology_rank(cx), ell(cx, s1) + ell(cx, s2))


# -- dualize -------------------------------------------------------------


def test_dualize_trivial_gradings():
    cx = GradedComplex.build("c", [("a", 1), ("b", 0), ("c", -1)])
    dual = dualize(cx)
    assert [g for _, g in dual.generators] == [-1, 0, 1]
    assert dual.arrows == frozenset()


def test_dualize_single_arrow():
    cx = GradedComplex.build("c", [("a", 1), ("b", 0)], [("a", "b")])
    dual = dualize(cx)
    assert dict(dual.generators) == {"a": -1, "b": 0}
    assert dual.arrows == frozenset({("b", "a")})
    assert validate(dual) == []


def test_dualize_involution_and_rank_invariance():
    rng = random.Random(31)
    for _ in range(20):
        cx = random_matching_complex(rng, rng.randint(0, 8))
        assert dualize(dualize(cx)) == cx
        assert total_homology_rank(dualize(cx)) == total_homology_rank(cx)


def test_dualize_staircase_explicitly():
    dual = dualize(staircase(1))
    assert dict(dual.generators) == {"x1": -1, "x0": 0, "x-1": 1}
    assert dual.arrows == frozenset({("x-1", "x0")})
    assert validate(dual) == []


# -- profile builder ------------------------------------------------------


def test_complex_from_profile_counts():
    cx = complex_from_profile((1, 0, 3))
    by_grading: dict[int, int] = {}
    for _, a in cx.generators:
        by_grading[a] = by_grading.get(a, 0) + 1
    assert by_grading == {-2: 3, 0: 1, 2: 3}
    assert cx.arrows == frozenset()
    assert validate(cx) == []


# -- JSON interchange ------------------------------------------------------


def test_json_round_trip():
    cx = staircase(3)
    doc = json.loads(json.dumps(complex_to_dict(cx)))
    assert complex_from_dict(doc) == cx


def test_json_rejects_unknown_fields():
    doc = complex_to_dict(staircase(1))
    doc["extra"] = 1
    with pytest.raises(ValueError, match="unknown fields"):
        complex_from_dict(doc)


def test_json_rejects_duplicate_arrows():
    doc = complex_to_dict(staircase(1))
    doc["arrows"] = doc["arrows"] + doc["arrows"]
    with pytest.raises(ValueError, match="duplicate arrow"):
        complex_from_dict(doc)


def test_json_rejects_malformed_entries():
    with pytest.raises(ValueError, match="missing"):
        complex_from_dict({"name": "x", "generators": []})
    with pytest.raises(ValueError, match="malformed generator"):
        complex_from_dict({"name": "x", "arrows": [],
                           "generators": [{"id": "a", "alexander": "one"}]})
    with pytest.raises(ValueError, match="malformed arrow"):
        complex_from_dict({"name": "x", "generators": [], "arrows": [["a"]]})


def test_json_empty_generator_list_is_valid():
    cx = complex_from_dict({"name": "empty", "generators": [], "arrows": []})
    assert cx.size == 0


def test_json_rejects_invalid_complex():
    doc = {"name": "bad",
           "generators": [{"id": "a", "alexander": 0}, {"id": "b", "alexander": 1}],
           "arrows": [["a", "b"]]}
    with pytest.raises(ValueError, match="strictly decrease"):
        complex_from_dict(doc)
