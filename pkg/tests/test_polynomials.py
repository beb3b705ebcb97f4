from fractions import Fraction

import pytest
from sympy import Poly

from sphere.errors import NotSemigeneral
from sphere.geom_core import PlanarPoint, Sign
from sphere.polynomials import (T, brackets_for, evaluate, isolate_roots, open_root_count, separate, sign_at,
                                split_point, sturm_count, wall_polynomial)

import sympy as sp


def poly(expr):
    return Poly(expr, T, domain='QQ')


def test_wall_polynomial_of_fixed_dots():
    points = [PlanarPoint(u, v) for u, v in ((0, 0), (1, 0), (0, 1), (2, 2))]
    f = wall_polynomial(points, points)
    assert f.degree() == 0
    assert evaluate(f, Fraction(1, 3)) == 32
    assert sign_at(f, 0) is Sign.POSITIVE


def test_wall_polynomial_vanishes_on_cocircular_dots():
    starts = [PlanarPoint(u, v) for u, v in ((1, 0), (0, 1), (-1, 0), (0, 0))]
    ends = [PlanarPoint(u, v) for u, v in ((1, 0), (0, 1), (-1, 0), (0, -2))]
    f = wall_polynomial(starts, ends)
    # the fourth dot reaches the unit circle at t = 1/2
    assert evaluate(f, Fraction(1, 2)) == 0
    assert sign_at(f, 0) is not sign_at(f, 1)


def test_sturm_count_half_open():
    f = poly((2 * T - 1) * (T - 1))
    sequence = sp.sturm(f)
    assert sturm_count(sequence, 0, 1) == 2
    assert open_root_count(f, 0, 1) == 1
    assert open_root_count(poly(T + 3), 0, 1) == 0


def test_isolate_roots():
    f = poly((3 * T - 1) * (3 * T - 2) * (T + 5))
    brackets = isolate_roots(f)
    assert len(brackets) == 2
    (a, b), (c, d) = brackets
    assert a < Fraction(1, 3) < b <= c < Fraction(2, 3) < d


def test_isolate_roots_rejects_root_at_end():
    with pytest.raises(ValueError):
        isolate_roots(poly(T))


def test_split_point_avoids_roots():
    f = poly(2 * T - 1)
    mid = split_point(f, Fraction(0), Fraction(1))
    assert 0 < mid < 1
    assert evaluate(f, mid) != 0


def test_brackets_carry_multiplicity():
    f = poly((3 * T - 1) ** 2 * (3 * T - 2))
    brackets = brackets_for((0, 1, 2, 3), f)
    crossing = {b.crossing for b in brackets}
    assert len(brackets) == 2
    assert crossing == {True, False}


def test_separate_disjoint_brackets():
    brackets = brackets_for((0,), poly(4 * T - 1)) + brackets_for((1,), poly(4 * T - 3))
    separated = separate(brackets, refine_limit=64)
    assert [b.source for b in separated] == [(0,), (1,)]
    assert separated[0].hi <= separated[1].lo


def test_separate_nearby_roots():
    brackets = brackets_for((0,), poly(1000 * T - 500)) + brackets_for((1,), poly(1000 * T - 501))
    separated = separate(brackets, refine_limit=256)
    assert [b.source for b in separated] == [(0,), (1,)]


def test_separate_shared_root_is_not_semigeneral():
    brackets = brackets_for((0,), poly(2 * T - 1)) + brackets_for((1,), poly((2 * T - 1) * (T + 3)))
    with pytest.raises(NotSemigeneral) as e:
        separate(brackets, refine_limit=64)
    assert sorted(e.value.quadruples) == [(0,), (1,)]
