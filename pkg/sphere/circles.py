"""
Incident circles (through three dots) and avoidant circles (through none).

All counts read the configuration's side table, so each triple's
orientation is evaluated once per dot and both orientations of the triple
are derived from it.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from . import formulas
from .errors import IndexOutOfRange, InternalInconsistency, NotGeneralPosition, SizeMismatch
from .feasibility import plane_separates
from .geom_core import POLE, DotConfig, Sign, indices_of, mask_of, orient, require_general_position, rotate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IncidentRecord:
    triple: tuple
    left_count: int
    right_count: int
    left: int
    right: int

    @property
    def labels(self) -> list:
        return [i + 1 for i in self.triple]


def _require(config: DotConfig, minimum: int):
    if config.n < minimum:
        raise SizeMismatch(f"This operation needs at least {minimum} dots (got {config.n}).")
    require_general_position(config)


def enumerate_incident(config: DotConfig) -> list:
    _require(config, 3)
    records = []
    for triple, sides in config.side_table.items():
        records.append(IncidentRecord(
            triple, sides.left.bit_count(), sides.right.bit_count(), sides.left, sides.right))
    return records


def incident_histogram(config: DotConfig) -> dict:
    """Maps (k, l) with k <= l to the number of incident circles splitting the rest k / l."""
    histogram = Counter()
    for record in enumerate_incident(config):
        k, l = sorted((record.left_count, record.right_count))
        histogram[(k, l)] += 1
    return {pair: histogram.get(pair, 0) for pair in formulas.side_pairs(config.n)}


def count_oriented_incident(config: DotConfig, k: int) -> int:
    _require(config, 3)
    if not 0 <= k <= config.n - 3:
        raise IndexOutOfRange(f"k must lie in 0..{config.n - 3} (got {k}).")
    count = 0
    for sides in config.side_table.values():
        count += (sides.left.bit_count() == k) + (sides.right.bit_count() == k)
    return count


def _hull_faces(config: DotConfig) -> list:
    return [triple for triple, sides in config.side_table.items() if not sides.left or not sides.right]


def hull_face_count(config: DotConfig) -> int:
    """Incident circles with an empty side, i.e. faces of the convex hull of the dots."""
    _require(config, 4)
    return len(_hull_faces(config))


def hull_edge_count(config: DotConfig) -> int:
    _require(config, 4)
    edges = set()
    for triple in _hull_faces(config):
        edges.update(combinations(triple, 2))
    return len(edges)


# --- Avoidant circles ---

def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def separable_subsets(config: DotConfig) -> set:
    """Every proper non-empty subset realizable as the left side of an avoidant circle."""
    _require(config, 4)
    full = config.full_mask
    found = set()
    for triple, sides in config.side_table.items():
        touching = mask_of(triple)
        for extra in _submasks(touching):
            for side in (sides.left, sides.right):
                candidate = side | extra
                if candidate and candidate != full:
                    found.add(candidate)
    return found


def enumerate_separable(config: DotConfig, k: int) -> frozenset:
    _require(config, 4)
    if not 0 < k < config.n:
        raise IndexOutOfRange(f"k must lie in 1..{config.n - 1} (got {k}).")
    return frozenset(s for s in separable_subsets(config) if s.bit_count() == k)


def oracle_separable(config: DotConfig, subset: int) -> bool:
    """Decides by exact linear feasibility whether a plane cuts `subset` off from the other dots."""
    if subset < 0 or subset >> config.n:
        raise IndexOutOfRange(f"Subset mask {subset:#x} names dots outside 1..{config.n}.")
    size = subset.bit_count()
    if not 0 < size < config.n:
        raise SizeMismatch("Only proper non-empty subsets can be separated.")
    inside = [config.dots[i].as_tuple() for i in indices_of(subset)]
    outside = [config.dots[i].as_tuple() for i in indices_of(config.full_mask & ~subset)]
    return plane_separates(inside, outside)


def avoidant_partition_count(config: DotConfig, k: int, l: int) -> int:
    if k + l != config.n or k < 1 or l < 1 or config.n < 4:
        raise SizeMismatch(f"Need k, l >= 1 with k + l = n >= 4 (got k={k}, l={l}, n={config.n}).")
    oriented = len(enumerate_separable(config, k))
    if k != l:
        return oriented
    if oriented % 2:
        raise InternalInconsistency(f"Odd number ({oriented}) of oriented classes for an even split.")
    return oriented // 2


def avoidant_partitions(config: DotConfig, k: int, l: int) -> list:
    """The unordered separable partitions, each as (smaller-or-first side, other side) masks."""
    avoidant_partition_count(config, k, l)
    full = config.full_mask
    partitions = set()
    for subset in enumerate_separable(config, k):
        complement = full & ~subset
        if k == l:
            subset, complement = min(subset, complement), max(subset, complement)
        partitions.add((subset, complement))
    return sorted(partitions)


# --- Planar view ---

def planar_interior_histogram(config: DotConfig) -> dict:
    """
    For each incident circle, the number of dots inside its planar image: the
    side of the spherical circle away from the projection pole.
    """
    _require(config, 3)
    histogram = Counter()
    for triple, sides in config.side_table.items():
        pole_side = orient(*(config.dots[i] for i in triple), POLE)
        if pole_side is Sign.ZERO:
            labels = ", ".join(str(i + 1) for i in triple)
            raise NotGeneralPosition(triple, f"Dots {{{labels}}} are collinear in the plane.")
        interior = sides.right if pole_side is Sign.POSITIVE else sides.left
        histogram[interior.bit_count()] += 1
    return dict(sorted(histogram.items()))


# --- Consistency checks ---

def double_count_check(config: DotConfig, k: int) -> bool:
    """
    Deleting a dot: n * I(k-1, D - d) = (n-k-2) * I(k-1, D) + k * I(k, D) on counted
    values, for every d, and summed over all deletions.
    """
    n = config.n
    if not 1 <= k <= n - 3:
        raise IndexOutOfRange(f"k must lie in 1..{n - 3} (got {k}).")
    rhs = (n - k - 2) * count_oriented_incident(config, k - 1) + k * count_oriented_incident(config, k)
    total = 0
    ok = True
    for d in range(n):
        reduced = count_oriented_incident(config.without(d), k - 1)
        total += reduced
        if n * reduced != rhs:
            logger.warning("Deletion identity fails for dot %d at k=%d: %d != %d.", d + 1, k, n * reduced, rhs)
            ok = False
    # a circle with k-1 dots on its left is counted once per right dot, one with k once per left dot
    if total != rhs:
        logger.warning("Summed deletion identity fails at k=%d: %d != %d.", k, total, rhs)
        ok = False
    return ok


def counts_signature(config: DotConfig) -> dict:
    """Configuration-independent counts, used to compare a configuration with its rotations."""
    signature = {
        "incident": incident_histogram(config),
        "oriented": [count_oriented_incident(config, k) for k in range(config.n - 2)],
    }
    if config.n >= 4:
        signature["hull_faces"] = hull_face_count(config)
        signature["avoidant"] = {pair: avoidant_partition_count(config, *pair) for pair in formulas.avoidant_pairs(config.n)}
    return signature


def rotation_invariance_check(config: DotConfig, rotations) -> bool:
    reference = counts_signature(config)
    for quaternion in rotations:
        rotated = rotate(config, quaternion)
        if counts_signature(rotated) != reference:
            logger.warning("Counts changed under rotation %s.", quaternion)
            return False
    return True
