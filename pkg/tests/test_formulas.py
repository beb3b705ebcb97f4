import pytest

from sphere import formulas
from sphere.errors import SizeMismatch


@pytest.mark.parametrize("k, l, expected", [(1, 1, 4), (0, 2, 6), (2, 2, 9), (0, 1, 4)])
def test_incident_pair(k, l, expected):
    assert formulas.incident_pair(k, l) == expected


@pytest.mark.parametrize("k, n, expected", [(0, 4, 4), (0, 6, 8), (1, 6, 12), (-1, 6, 0), (4, 6, 0)])
def test_oriented_incident(k, n, expected):
    assert formulas.oriented_incident(k, n) == expected


@pytest.mark.parametrize("n, faces, edges", [(4, 4, 6), (6, 8, 12), (10, 16, 24)])
def test_hull(n, faces, edges):
    assert formulas.hull_faces(n) == faces
    assert formulas.hull_edges(n) == edges


@pytest.mark.parametrize("k, l, expected", [(3, 3, 7), (1, 3, 4), (2, 2, 3), (1, 5, 6)])
def test_avoidant_pair(k, l, expected):
    assert formulas.avoidant_pair(k, l) == expected


@pytest.mark.parametrize("k, l", [(0, 4), (1, 2), (2, 1)])
def test_avoidant_pair_rejects_small_sides(k, l):
    with pytest.raises(SizeMismatch):
        formulas.avoidant_pair(k, l)


@pytest.mark.parametrize("k, n, expected", [
    (2, 6, (8, 12, 30, 12)),
    (1, 4, (0, 4, 6, 4)),
    (2, 4, (4, 4, 12, 6)),
    (3, 6, (12, 12, 36, 14)),
])
def test_strata(k, n, expected):
    assert formulas.strata(k, n) == expected


def test_strata_euler_characteristic():
    for n in range(4, 12):
        for k in range(1, n):
            whites, blacks, edges, regions = formulas.strata(k, n)
            assert whites + blacks - edges + regions == 2
            assert 2 * edges == 3 * (whites + blacks)
            assert formulas.oriented_separable(k, n) == regions


def test_side_pairs_cover_all_circles():
    for n in range(3, 12):
        total = sum(formulas.incident_pair(k, l) for k, l in formulas.side_pairs(n))
        assert total == n * (n - 1) * (n - 2) // 6


def test_avoidant_pairs():
    assert formulas.avoidant_pairs(6) == [(1, 5), (2, 4), (3, 3)]
