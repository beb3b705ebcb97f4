"""
Wall polynomials of linear planar paths and exact real-root isolation.

Isolation works on square-free factors: Sturm sequences count the roots in
(lo, hi], rational bisection splits brackets until each holds one root, and
`separate` refines brackets from different sources until no two overlap.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp
from sympy import Matrix, Poly, Rational

from .errors import NotSemigeneral
from .geom_core import Sign

logger = logging.getLogger(__name__)

T = sp.Symbol('t')


def _rational(value: Fraction) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def evaluate(poly: Poly, t) -> Fraction:
    value = poly.eval(_rational(t))
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def sign_at(poly: Poly, t) -> Sign:
    return Sign.of(evaluate(poly, t))


def wall_polynomial(starts, ends) -> Poly:
    """
    f(t) for four dots moving linearly in the plane from `starts` to `ends`.

    With s = u^2 + v^2, f = 8 * det[P_b - P_a, P_c - P_a, P_d - P_a] over the
    rows P = (u, v, s). The sign of f(t) equals the orientation sign of the
    lifted dots at time t.
    """
    rows = []
    for start, end in zip(starts, ends):
        u = _rational(start.u) + T * (_rational(end.u) - _rational(start.u))
        v = _rational(start.v) + T * (_rational(end.v) - _rational(start.v))
        rows.append((u, v, u * u + v * v))
    base = rows[0]
    matrix = Matrix([[x - y for x, y in zip(row, base)] for row in rows[1:]])
    return Poly(sp.expand(8 * matrix.det(method='berkowitz')), T, domain='QQ')


def _lifted_path(start, end) -> tuple:
    """Lift of a linearly moving planar dot as (2u, 2v, s - 1) over the positive weight s + 1."""
    u = _rational(start.u) + T * (_rational(end.u) - _rational(start.u))
    v = _rational(start.v) + T * (_rational(end.v) - _rational(start.v))
    s = u * u + v * v
    return (2 * u, 2 * v, s - 1), s + 1


def _cross(p, q) -> tuple:
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def normal_path(starts, ends) -> tuple:
    """
    Normal (b - a) x (c - a) of three lifted moving dots as polynomials in t,
    scaled by the positive product of their weights.
    """
    (a, wa), (b, wb), (c, wc) = (_lifted_path(s, e) for s, e in zip(starts, ends))
    terms = [(wc, _cross(a, b)), (wa, _cross(b, c)), (wb, _cross(c, a))]
    return tuple(sp.expand(sum(w * term[i] for w, term in terms)) for i in range(3))


def alignment_polynomial(normal, reference) -> Poly:
    """Dot product of two normal paths; its sign says whether they point the same way."""
    return Poly(sp.expand(sum(x * y for x, y in zip(normal, reference))), T, domain='QQ')


def constant_sign_on(poly: Poly, lo, hi) -> bool:
    """True when the polynomial has no root in [lo, hi]."""
    if poly.is_zero or evaluate(poly, lo) == 0 or evaluate(poly, hi) == 0:
        return False
    return open_root_count(poly, lo, hi) == 0


def _sign_changes(values) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def sturm_count(sequence, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi]."""
    lo, hi = _rational(lo), _rational(hi)
    return _sign_changes([p.eval(lo) for p in sequence]) - _sign_changes([p.eval(hi) for p in sequence])


def open_root_count(poly: Poly, lo, hi) -> int:
    """Distinct real roots strictly inside (lo, hi)."""
    if poly.degree() <= 0:
        return 0
    count = sturm_count(sp.sturm(poly), lo, hi)
    if evaluate(poly, hi) == 0:
        count -= 1
    return count


def split_point(poly: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    step = 3
    while evaluate(poly, mid) == 0:
        # nudge off an exact root
        mid = lo + (hi - lo) * Fraction(step - 1, 2 * step)
        step += 1
    return mid


def isolate_roots(factor: Poly, lo=Fraction(0), hi=Fraction(1)) -> list:
    """Brackets (a, b), each holding exactly one root of the square-free factor in (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if factor.degree() <= 0:
        return []
    if evaluate(factor, lo) == 0 or evaluate(factor, hi) == 0:
        raise ValueError(f"Bracket ends {lo} and {hi} must not be roots.")
    sequence = sp.sturm(factor)
    total = sturm_count(sequence, lo, hi)
    brackets = []
    pending = [(lo, hi, total)]
    while pending:
        a, b, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            brackets.append((a, b))
            continue
        mid = split_point(factor, a, b)
        left = sturm_count(sequence, a, mid)
        pending.append((a, mid, left))
        pending.append((mid, b, count - left))
    return sorted(brackets)


@dataclass
class RootBracket:
    """One root of one square-free factor of a source's polynomial, bracketed in (lo, hi)."""
    source: tuple
    factor: Poly
    multiplicity: int
    lo: Fraction
    hi: Fraction

    @property
    def crossing(self) -> bool:
        return self.multiplicity % 2 == 1

    def refine(self):
        mid = split_point(self.factor, self.lo, self.hi)
        if sign_at(self.factor, self.lo) != sign_at(self.factor, mid):
            self.hi = mid
        else:
            self.lo = mid

    def overlaps(self, other: "RootBracket") -> bool:
        return max(self.lo, other.lo) < min(self.hi, other.hi)


def brackets_for(source, poly: Poly, lo=Fraction(0), hi=Fraction(1)) -> list:
    _, factors = poly.sqf_list()
    brackets = []
    for factor, multiplicity in factors:
        for a, b in isolate_roots(factor, lo, hi):
            brackets.append(RootBracket(tuple(source), factor, multiplicity, a, b))
    return brackets


def _share_root(a: RootBracket, b: RootBracket) -> bool:
    common = a.factor.gcd(b.factor)
    if common.degree() <= 0:
        return False
    return open_root_count(common, max(a.lo, b.lo), min(a.hi, b.hi)) > 0


def separate(brackets: list, refine_limit: int) -> list:
    """
    Refines brackets until they are pairwise disjoint; returns them sorted.

    Two brackets from different sources whose factors share a root inside
    both brackets mean two walls are hit at the same instant.
    """
    steps = 0
    while True:
        brackets.sort(key=lambda b: (b.lo, b.hi))
        clash = None
        for first, second in zip(brackets, brackets[1:]):
            if first.overlaps(second):
                clash = (first, second)
                break
        if clash is None:
            logger.debug("Separated %d root brackets in %d refinement steps.", len(brackets), steps)
            return brackets
        first, second = clash
        if first.source != second.source and _share_root(first, second):
            raise NotSemigeneral([first.source, second.source])
        steps += 1
        if steps > refine_limit:
            raise NotSemigeneral(
                [first.source, second.source],
                f"Could not separate wall crossings within {refine_limit} refinement steps.")
        first.refine()
        second.refine()
