from sphere.feasibility import plane_separates, strictly_feasible


def test_empty_system_is_feasible():
    assert strictly_feasible([])


def test_positive_orthant_is_feasible():
    assert strictly_feasible([(1, 0), (0, 1), (1, 1)])


def test_opposite_rows_are_infeasible():
    assert not strictly_feasible([(1, 0), (-1, 0)])
    assert not strictly_feasible([(2,), (-3,)])


def test_zero_row_is_infeasible():
    assert not strictly_feasible([(0, 0), (1, 0)])


def test_eliminated_contradiction():
    # x + y > 0, x < 0, y < 0
    assert not strictly_feasible([(1, 1), (-1, 0), (0, -1)])


def test_rational_rows():
    assert strictly_feasible([("1/2", "-1/3"), ("-1/5", "1/2")])


def test_plane_separates_single_point():
    assert plane_separates([(0, 0, 0)], [(1, 0, 0)])


def test_plane_cannot_separate_midpoint():
    assert not plane_separates([(1, 0, 0), (-1, 0, 0)], [(0, 0, 0)])
    assert plane_separates([(0, 0, 0)], [(1, 0, 0), (-1, 0, 0)]) is False
