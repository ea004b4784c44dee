from fractions import Fraction
from itertools import product

import pytest

from spheremap import (
    BudgetExceeded,
    InvalidDimension,
    MAX_SPLIT_VERTICES,
    SphereStatus,
    UnsupportedDimension,
    build_complex,
    degree,
    enumerate_spheres,
    exists_labeling,
    is_sphere,
    known_lambda,
    labeled_sphere,
    lambda_search,
    lambda_table,
    orient,
)

OCTAHEDRON = build_complex([
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 5),
    (6, 2, 3), (6, 3, 4), (6, 4, 5), (6, 2, 5),
])


def brute_force_degrees(K):
    """Set of degrees over every coloring, by direct engine evaluation."""
    oc = orient(K)
    verts = K.vertices
    ncolors = K.dimension + 2
    out = set()
    for colors in product(range(1, ncolors + 1), repeat=len(verts)):
        ls = labeled_sphere(oc, dict(zip(verts, colors)))
        out.add(degree(ls).degree)
    return out


def test_enumerate_four_vertices_single_class():
    classes = list(enumerate_spheres(2, 4))
    assert len(classes) == 1
    assert len(classes[0].facets) == 4


def test_enumerate_circle_single_class():
    classes = list(enumerate_spheres(1, 7))
    assert len(classes) == 1
    assert len(classes[0].facets) == 7


def test_enumerate_class_counts():
    expected = {5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233}
    for v, count in expected.items():
        assert len(list(enumerate_spheres(2, v))) == count


def test_enumerate_guards():
    with pytest.raises(UnsupportedDimension):
        list(enumerate_spheres(3, 6))
    with pytest.raises(InvalidDimension):
        list(enumerate_spheres(2, 3))
    with pytest.raises(BudgetExceeded):
        list(enumerate_spheres(2, MAX_SPLIT_VERTICES + 1))


def test_enumerate_soundness_and_canonical_ids():
    for v in range(4, 8):
        for K in enumerate_spheres(2, v):
            assert K.vertices == tuple(range(1, v + 1))
            assert is_sphere(K).status is SphereStatus.SPHERE


def test_enumerate_deterministic():
    first = list(enumerate_spheres(2, 7))
    second = list(enumerate_spheres(2, 7))
    assert first == second


def test_exists_labeling_hexagon_degree_two():
    hexagon = build_complex([(i, i % 6 + 1) for i in range(1, 7)])
    witness = exists_labeling(hexagon, 2)
    assert witness is not None
    ls = labeled_sphere(orient(hexagon), witness)
    assert degree(ls).degree == 2
    # a degree-2 circle on 6 vertices must use each color exactly twice
    assert sorted(witness.values()) == [1, 1, 2, 2, 3, 3]


def test_exists_labeling_four_vertex_sphere_no_degree_two():
    tetra = build_complex([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert exists_labeling(tetra, 2) is None
    assert 2 not in brute_force_degrees(tetra)


def test_exists_labeling_octahedron_degree_one():
    witness = exists_labeling(OCTAHEDRON, 1)
    assert witness is not None
    assert degree(labeled_sphere(orient(OCTAHEDRON), witness)).degree == 1
    assert 1 in brute_force_degrees(OCTAHEDRON)


def test_pruned_search_equals_brute_force():
    # completeness of the pruning + first-use color normalization, checked
    # against the unpruned 4^v scan on every small class
    for v in (4, 5, 6):
        for K in enumerate_spheres(2, v):
            reachable = brute_force_degrees(K)
            for d in range(-4, 5):
                witness = exists_labeling(K, d)
                assert (witness is not None) == (d in reachable)
                if witness is not None:
                    ls = labeled_sphere(orient(K), witness)
                    assert degree(ls).degree == d


def test_lambda_circle_values():
    assert lambda_search(1, 3, 12).lambda_value == 9
    result = lambda_search(1, 3, 8)
    assert result.lambda_value is None
    assert not result.found
    assert result.status == "NotFoundWithinBudget"


def test_lambda_small_sphere_values():
    result = lambda_search(2, 3, 10)
    assert result.lambda_value == 8
    assert degree(result.witness).degree == 3
    assert lambda_search(2, 4, 10).lambda_value == 10


def test_lambda_counts_examined():
    result = lambda_search(2, 2, 8)
    # classes with v < 7 are all exhausted: 1 + 1 + 2 at v = 4, 5, 6
    assert result.lambda_value == 7
    assert result.triangulations_examined >= 5
    assert result.labelings_examined > 0


def test_lambda_parallel_matches_sequential():
    seq = lambda_search(2, 3, 9, jobs=1)
    par = lambda_search(2, 3, 9, jobs=2)
    assert seq == par


def test_lambda_guards():
    with pytest.raises(UnsupportedDimension):
        lambda_search(3, 2, 8)
    with pytest.raises(BudgetExceeded):
        lambda_search(2, 2, MAX_SPLIT_VERTICES + 1)


def test_known_lambda_values():
    assert known_lambda(1, 5) == (15, "cycle colored 1,2,3 repeating")
    assert known_lambda(1, 0)[0] == 3
    assert known_lambda(3, 1)[0] == 5
    assert known_lambda(4, 0)[0] == 6
    assert known_lambda(2, 3)[0] == 8
    assert known_lambda(3, 4)[0] == 10
    assert known_lambda(5, -2)[0] == 10
    assert known_lambda(2, 5) is None
    assert known_lambda(2, 4) is None  # not covered by the n >= |d|-1 family
    with pytest.raises(InvalidDimension):
        known_lambda(0, 1)


def test_lambda_table_statuses():
    table = lambda_table([
        {"n": 1, "d": 2, "v_max": 6},
        {"n": 1, "d": 2, "v_max": 5},
        {"n": 4, "d": 2},
        {"n": 2, "d": 7},
    ])
    by_status = {row.status: row for row in table.rows}
    assert by_status["exact_search"].lambda_value == 6
    assert by_status["not_found_within_budget"].lambda_value is None
    assert by_status["exact_formula"].lambda_value == 9
    upper = by_status["upper_bound"]
    assert upper.lambda_value == 16  # generator count for (2, 7)


def test_lambda_table_search_row_for_degree_four():
    table = lambda_table([{"n": 2, "d": 4, "v_max": 10}])
    row = table.rows[0]
    assert row.status == "exact_search" and row.lambda_value == 10
    assert row.ratio_over_d == Fraction(5, 2)
    assert row.ratio_over_n == Fraction(5, 1)


def test_lambda_table_circle_ratios():
    table = lambda_table(
        [{"n": 1, "d": d, "v_max": 3 * d} for d in range(1, 5)]
    )
    ratios = table.ratios_over_d_by_n()[1]
    assert ratios == {d: Fraction(3) for d in range(1, 5)}


def test_lambda_table_degree_two_family():
    table = lambda_table([{"n": n, "d": 2} for n in range(3, 9)])
    for row in table.rows:
        assert row.status == "exact_formula"
        assert row.lambda_value == row.n + 5
    by_d = table.ratios_over_n_by_d()[2]
    assert by_d[3] == Fraction(8, 3) and by_d[8] == Fraction(13, 8)
