"""
Exact representation of dot configurations on the unit sphere.

Dots are produced by lifting rational planar points through the inverse
stereographic projection from the pole (0,0,1), so every coordinate is an
exact Fraction and every predicate below is an exact sign computation.

Indices are 0-based inside the library; reports and exports add 1.
"""

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import ConfigParseError, IndexOutOfRange, NotGeneralPosition, PoleProjection, UnsupportedSize

logger = logging.getLogger(__name__)

# Subsets of dots are int bitmasks (bit i <-> dot i), so configurations are capped.
MAX_DOTS = 64

_CANONICAL_RATIONAL = re.compile(r'^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$')


# --- Rationals ---

def parse_rational(text: str) -> Fraction:
    """Parses a canonical "p/q" or "p" string. Non-canonical spellings are rejected."""
    if not isinstance(text, str) or not _CANONICAL_RATIONAL.match(text):
        raise ConfigParseError(f"'{text}' is not a canonical rational string.")
    value = Fraction(text)
    if format_rational(value) != text:
        raise ConfigParseError(f"'{text}' is not in lowest terms (expected '{format_rational(value)}').")
    return value


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


# --- Points ---

class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> "Sign":
        return cls((value > 0) - (value < 0))


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    ON = "on"


@dataclass(frozen=True)
class PlanarPoint:
    u: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'u', Fraction(self.u))
        object.__setattr__(self, 'v', Fraction(self.v))


@dataclass(frozen=True)
class SpherePoint:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ('x', 'y', 'z'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.x * self.x + self.y * self.y + self.z * self.z != 1:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not on the unit sphere.")

    def as_tuple(self) -> tuple:
        return (self.x, self.y, self.z)

    @cached_property
    def homogeneous(self) -> tuple:
        """Integer coordinates (X, Y, Z, W) with W > 0 and (x, y, z) = (X, Y, Z) / W."""
        w = math.lcm(self.x.denominator, self.y.denominator, self.z.denominator)
        return (int(self.x * w), int(self.y * w), int(self.z * w), w)


POLE = SpherePoint(0, 0, 1)

Vector3 = Union[SpherePoint, Sequence[Fraction]]


def _coords(p: Vector3) -> tuple:
    return p.as_tuple() if isinstance(p, SpherePoint) else tuple(Fraction(c) for c in p)


def dot(p: Vector3, q: Vector3) -> Fraction:
    (a, b, c), (x, y, z) = _coords(p), _coords(q)
    return a * x + b * y + c * z


def cross(p: Vector3, q: Vector3) -> tuple:
    (a, b, c), (x, y, z) = _coords(p), _coords(q)
    return (b * z - c * y, c * x - a * z, a * y - b * x)


def lift(p: PlanarPoint) -> SpherePoint:
    """Inverse stereographic projection from the pole (0,0,1)."""
    s = p.u * p.u + p.v * p.v
    den = 1 + s
    return SpherePoint(2 * p.u / den, 2 * p.v / den, (s - 1) / den)


def project(p: SpherePoint) -> PlanarPoint:
    if p == POLE:
        raise PoleProjection()
    den = 1 - p.z
    return PlanarPoint(p.x / den, p.y / den)


def antipode(p: SpherePoint) -> SpherePoint:
    return SpherePoint(-p.x, -p.y, -p.z)


def _det3(m) -> int:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _det4(m) -> int:
    total = 0
    for col in range(4):
        if m[0][col] == 0:
            continue
        minor = [[row[c] for c in range(4) if c != col] for row in m[1:]]
        term = m[0][col] * _det3(minor)
        total += term if col % 2 == 0 else -term
    return total


def orient(a: SpherePoint, b: SpherePoint, c: SpherePoint, d: SpherePoint) -> Sign:
    """
    Sign of det[b-a, c-a, d-a].

    Evaluated on integer homogeneous coordinates: the 4x4 determinant of the
    rows (X, Y, Z, W) equals -W_a*W_b*W_c*W_d * det[b-a, c-a, d-a].
    """
    value = _det4([a.homogeneous, b.homogeneous, c.homogeneous, d.homogeneous])
    return Sign.of(-value)


def nearer(p: Vector3, d1: SpherePoint, d2: SpherePoint) -> Sign:
    """POSITIVE when d1 is strictly closer to p than d2 (p may be any nonzero direction)."""
    return Sign.of(dot(p, d1) - dot(p, d2))


# --- Bitmask helpers ---

def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def labels_of(mask: int) -> list:
    """1-based dot labels of a mask, for reports."""
    return [i + 1 for i in indices_of(mask)]


# --- Configurations ---

class TripleSides(NamedTuple):
    """Masks of dots strictly left / strictly right / on the circle of a triple in increasing order."""
    left: int
    right: int
    on: int


@dataclass(frozen=True)
class PositionCheck:
    certified: bool
    violation: Optional[tuple] = None
    quadruples_checked: int = 0

    def __bool__(self):
        return self.certified


@dataclass(frozen=True)
class DotConfig:
    dots: tuple
    planar_provenance: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, 'dots', tuple(self.dots))
        if self.planar_provenance is not None:
            object.__setattr__(self, 'planar_provenance', tuple(self.planar_provenance))
            if len(self.planar_provenance) != len(self.dots):
                raise ValueError("Planar provenance must have one point per dot.")
        if len(self.dots) > MAX_DOTS:
            raise UnsupportedSize(f"At most {MAX_DOTS} dots are supported (got {len(self.dots)}).")
        if POLE in self.dots:
            raise PoleProjection("A dot coincides with the projection pole (0,0,1).")
        if len(set(self.dots)) != len(self.dots):
            raise ValueError("Dots must be pairwise distinct.")

    @classmethod
    def from_planar(cls, points) -> "DotConfig":
        points = tuple(p if isinstance(p, PlanarPoint) else PlanarPoint(*p) for p in points)
        return cls(tuple(lift(p) for p in points), points)

    @classmethod
    def from_sphere(cls, points) -> "DotConfig":
        points = tuple(points)
        return cls(points, tuple(project(p) for p in points))

    @property
    def n(self) -> int:
        return len(self.dots)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def without(self, index: int) -> "DotConfig":
        check_indices(self, index)
        keep = [i for i in range(self.n) if i != index]
        provenance = None
        if self.planar_provenance is not None:
            provenance = tuple(self.planar_provenance[i] for i in keep)
        return DotConfig(tuple(self.dots[i] for i in keep), provenance)

    @cached_property
    def position_check(self) -> PositionCheck:
        return is_general_position(self)

    @cached_property
    def side_table(self) -> dict:
        """Per sorted triple, the Left/Right/On masks of its canonical orientation."""
        table = {}
        dots = self.dots
        for triple in combinations(range(self.n), 3):
            a, b, c = (dots[i] for i in triple)
            left = right = on = 0
            for d in range(self.n):
                if d in triple:
                    continue
                sign = orient(a, b, c, dots[d])
                if sign is Sign.POSITIVE:
                    left |= 1 << d
                elif sign is Sign.NEGATIVE:
                    right |= 1 << d
                else:
                    on |= 1 << d
            table[triple] = TripleSides(left, right, on)
        return table

    def sides(self, triple) -> TripleSides:
        return self.side_table[tuple(sorted(triple))]


def check_indices(config: DotConfig, *indices):
    for i in indices:
        if not isinstance(i, int) or not 0 <= i < config.n:
            raise IndexOutOfRange(f"Dot index {i} is outside 0..{config.n - 1}.")
    if len(set(indices)) != len(indices):
        raise IndexOutOfRange(f"Dot indices {indices} must be distinct.")


def side_of_circle(config: DotConfig, triple, d: int) -> Side:
    """Side of dot d relative to the circle through the ordered triple; left is the positive side."""
    i, j, k = triple
    check_indices(config, i, j, k, d)
    sign = orient(config.dots[i], config.dots[j], config.dots[k], config.dots[d])
    if sign is Sign.POSITIVE:
        return Side.LEFT
    if sign is Sign.NEGATIVE:
        return Side.RIGHT
    return Side.ON


def is_general_position(config: DotConfig) -> PositionCheck:
    """Checks every quadruple; returns the first cocircular one as the violation."""
    checked = 0
    dots = config.dots
    for quad in combinations(range(config.n), 4):
        checked += 1
        if orient(*(dots[i] for i in quad)) is Sign.ZERO:
            return PositionCheck(False, quad, checked)
    return PositionCheck(True, None, checked)


def require_general_position(config: DotConfig):
    check = config.position_check
    if not check:
        raise NotGeneralPosition(check.violation)


def is_planar_general_position(config: DotConfig) -> PositionCheck:
    """Spherical general position plus: no incident circle passes through the pole (no planar collinear triple)."""
    check = config.position_check
    if not check:
        return check
    for triple in combinations(range(config.n), 3):
        if orient(*(config.dots[i] for i in triple), POLE) is Sign.ZERO:
            return PositionCheck(False, triple, check.quadruples_checked)
    return check


def circumcenter_numeric(config: DotConfig, triple) -> np.ndarray:
    """Floating left center N/|N| with N = (b-a) x (c-a). Layout only, never used by predicates."""
    a, b, c = (config.dots[i] for i in triple)
    return left_center_numeric(a, b, c)


def left_center_numeric(a: SpherePoint, b: SpherePoint, c: SpherePoint) -> np.ndarray:
    ab = [q - p for p, q in zip(a.as_tuple(), b.as_tuple())]
    ac = [q - p for p, q in zip(a.as_tuple(), c.as_tuple())]
    normal = np.array([float(x) for x in cross(ab, ac)])
    return normal / np.linalg.norm(normal)


# --- Construction helpers ---

def interpolate(start: PlanarPoint, end: PlanarPoint, t: Fraction) -> PlanarPoint:
    t = Fraction(t)
    return PlanarPoint((1 - t) * start.u + t * end.u, (1 - t) * start.v + t * end.v)


def random_rational(rng, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_config(n: int, rng, bound: int = 64) -> DotConfig:
    """
    Seeded rejection sampler. Dots are drawn one at a time; a draw is
    redrawn while it is cocircular with three accepted dots or collinear
    (in the plane) with two of them.
    """
    if n > MAX_DOTS:
        raise UnsupportedSize(f"At most {MAX_DOTS} dots are supported (got {n}).")
    planar, lifted = [], []
    redraws = 0
    while len(planar) < n:
        candidate = PlanarPoint(random_rational(rng, bound), random_rational(rng, bound))
        if candidate in planar:
            redraws += 1
            continue
        point = lift(candidate)
        if _creates_violation(lifted, point):
            redraws += 1
            continue
        planar.append(candidate)
        lifted.append(point)
    logger.debug("Sampled %d dots with %d redraws.", n, redraws)
    return DotConfig(tuple(lifted), tuple(planar))


def _creates_violation(accepted, point) -> bool:
    for a, b in combinations(accepted, 2):
        if orient(a, b, point, POLE) is Sign.ZERO:
            return True
    for a, b, c in combinations(accepted, 3):
        if orient(a, b, c, point) is Sign.ZERO:
            return True
    return False


def rotation_matrix(quaternion) -> tuple:
    """Exact rational rotation matrix of a nonzero integer quaternion (a, b, c, d)."""
    a, b, c, d = quaternion
    norm = a * a + b * b + c * c + d * d
    if norm == 0:
        raise ValueError("The zero quaternion does not define a rotation.")
    rows = (
        (a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)),
        (2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)),
        (2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d),
    )
    return tuple(tuple(Fraction(entry, norm) for entry in row) for row in rows)


def rotate(config: DotConfig, quaternion) -> DotConfig:
    matrix = rotation_matrix(quaternion)
    rotated = []
    for p in config.dots:
        coords = p.as_tuple()
        rotated.append(SpherePoint(*(sum(m * x for m, x in zip(row, coords)) for row in matrix)))
    if POLE in rotated:
        raise PoleProjection("Rotation moves a dot onto the projection pole.")
    return DotConfig.from_sphere(rotated)


def random_rotation(rng, bound: int = 5) -> tuple:
    while True:
        quaternion = tuple(rng.randint(-bound, bound) for _ in range(4))
        # skip the identity and zero quaternions
        if any(quaternion[1:]) and any(quaternion):
            return quaternion
