"""
Exact strict feasibility of homogeneous linear systems by Fourier-Motzkin
elimination.

A system is a collection of integer rows r, read as the constraints
r . x > 0. Rows are kept primitive (divided by the gcd of their entries)
and deduplicated after every elimination step.
"""

import logging
import math
from fractions import Fraction

logger = logging.getLogger(__name__)


def _primitive(row) -> tuple:
    """Scales a rational row to a primitive integer row with the same direction."""
    row = [Fraction(x) for x in row]
    scale = math.lcm(*(x.denominator for x in row))
    ints = [int(x * scale) for x in row]
    g = math.gcd(*ints)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _eliminate(rows: set, column: int) -> set:
    positive, negative, kept = [], [], set()
    for row in rows:
        if row[column] > 0:
            positive.append(row)
        elif row[column] < 0:
            negative.append(row)
        else:
            kept.add(row[:column] + row[column + 1:])
    for p in positive:
        for q in negative:
            a, b = p[column], -q[column]
            combined = [b * x + a * y for x, y in zip(p, q)]
            del combined[column]
            kept.add(_primitive(combined))
    return kept


def strictly_feasible(rows) -> bool:
    """True when some x satisfies r . x > 0 for every row r."""
    system = {_primitive(r) for r in rows}
    if not system:
        return True
    while True:
        if any(not any(row) for row in system):
            return False
        width = len(next(iter(system)))
        if width == 1:
            signs = {row[0] > 0 for row in system}
            return len(signs) == 1
        system = _eliminate(system, 0)
        logger.debug("Eliminated one column: %d rows of width %d remain.", len(system), width - 1)
        if not system:
            # every remaining constraint was consumed; the free variables can be chosen
            return True


def plane_separates(inside, outside) -> bool:
    """
    Whether some affine plane w . x = c has every point of `inside` strictly
    above it and every point of `outside` strictly below it.

    Eliminating c from w . d - c > 0 and c - w . e > 0 leaves w . (d - e) > 0
    for every pair; both sides must be non-empty.
    """
    rows = []
    for d in inside:
        for e in outside:
            rows.append(tuple(x - y for x, y in zip(d, e)))
    return strictly_feasible(rows)
