"""Smoke tests for the Python bindings against known small cases."""

import pytest

import orbitclass as oc


def test_column_matroid_uniform():
    m = oc.column_matroid(oc.matrix([[1, 1, 1, 1], [1, 2, 3, 4]]))
    assert m["r"] == 2 and m["n"] == 4
    assert len(m["bases"]) == 6


def test_column_matroid_rejects_rank_deficient():
    with pytest.raises(ValueError, match="RankDeficient"):
        oc.column_matroid(oc.matrix([[1, 2, 3, 4], [2, 4, 6, 8]]))


def test_column_matroid_parallel_pairs():
    m = oc.column_matroid(oc.matrix([[1, 2, 0, 0], [0, 0, 1, 3]]))
    assert sorted(map(tuple, m["bases"])) == [(1, 3), (1, 4), (2, 3), (2, 4)]


def test_uniform_class_24_schur_form():
    c = oc.uniform_class(2, 4)
    rendering = oc.schur_rendering(c)
    assert "2*s[(1)](u)" in rendering
    assert "(t1 + t2 + t3 + t4)*s[()](u)" in rendering
    assert oc.uniform_class(2, 4, form="omega") == c


def test_localization_sign_pattern_24():
    value = oc.localization(oc.matrix([[1, 1, 1, 1], [1, 2, 3, 4]]), [1, 2])
    # -t1 - t2 + t3 + t4: four linear terms with unit coefficients.
    assert len(value) == 4
    coeff_by_t = {tuple(term["t"]): int(term["c"]) for term in value}
    assert coeff_by_t[(1, 0, 0, 0)] == -1
    assert coeff_by_t[(0, 0, 0, 1)] == 1


def test_round_trip_through_tuple():
    f = oc.full_tuple({"n": 4, "r": 2, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]})
    assert oc.gkm_violations(f) == []
    assert oc.lift_tuple(f) == oc.uniform_class(2, 4)
    expansion = oc.expand_tuple(f)
    assert expansion["overflow"] == []
    assert expansion["convention"] == {"eps_u": -1, "eps_t": -1}


def test_expand_class_matches_expand_tuple():
    f = oc.full_tuple({"n": 4, "r": 2, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]})
    assert oc.expand_class(oc.uniform_class(2, 4)) == oc.expand_tuple(f)


def test_degree_values():
    assert oc.degree(2, 4) == 4
    assert oc.degree(2, 5) == 10
    assert oc.degree(1, 7) == 1


def test_klyachko_variants():
    assert oc.klyachko_coefficient([2, 1], 2, 4) == 2
    assert oc.klyachko_coefficient([2, 1], 2, 4, start_index=1) == 0


def test_cauchy_check():
    assert oc.cauchy_check(2, 3)


def test_invalid_json_raises():
    with pytest.raises(ValueError, match="ParseError"):
        oc.column_matroid("{not json")
