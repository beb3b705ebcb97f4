"""
Families of configurations, wall crossings and the moves they induce on
the order-k Voronoi graph.

A family moves every dot along a straight line in the planar chart. The
four dots of a quadruple are cocircular exactly at the real roots of its
wall polynomial, so wall crossings are found by exact root isolation and
each crossing is classified by comparing the graphs just before and just
after it.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import (IdenticallyDegeneratePath, InternalInconsistency, NonLocalChange, NotSemigeneral,
                     RetriesExhausted, SizeMismatch)
from .geom_core import (DotConfig, PlanarPoint, Sign, interpolate, is_general_position, mask_of, project,
                        require_general_position)
from .polynomials import (alignment_polynomial, brackets_for, constant_sign_on, normal_path, separate, sign_at,
                          split_point, wall_polynomial)
from .voronoi import build_graph, format_vertex_key, strata_counts

logger = logging.getLogger(__name__)


class MoveKind(Enum):
    SQUARE_MOVE = "SquareMove"
    WHITE_RECONNECT = "WhiteReconnect"
    BLACK_RECONNECT = "BlackReconnect"
    NO_OP = "NoOp"


@dataclass(frozen=True)
class Family:
    start: tuple
    end: tuple
    walls: dict = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.start)

    def points_at(self, t) -> tuple:
        return tuple(interpolate(a, b, t) for a, b in zip(self.start, self.end))

    def config_at(self, t) -> DotConfig:
        return DotConfig.from_planar(self.points_at(t))


@dataclass(frozen=True)
class WallEvent:
    quadruple: tuple
    lo: Fraction
    hi: Fraction
    crossing: bool = True
    direction: Sign = Sign.ZERO

    @property
    def labels(self) -> list:
        return [i + 1 for i in self.quadruple]


@dataclass(frozen=True)
class MoveEvent:
    wall: WallEvent
    kind: MoveKind
    removed: frozenset
    added: frozenset
    antipodal_paired: bool
    second_kind: Optional[MoveKind]
    counts_before: tuple
    counts_after: tuple
    outside_left: tuple


@dataclass(frozen=True)
class MoveLog:
    k: int
    events: tuple
    touches: tuple
    attempts: int = 1
    perturbed: bool = False
    end: Optional[DotConfig] = None
    endpoint_match: bool = True


def _planar(config: DotConfig) -> tuple:
    if config.planar_provenance is not None:
        return config.planar_provenance
    return tuple(project(p) for p in config.dots)


def make_family(config_a: DotConfig, config_b: DotConfig) -> Family:
    if config_a.n != config_b.n:
        raise SizeMismatch(f"Endpoints have {config_a.n} and {config_b.n} dots.")
    require_general_position(config_a)
    require_general_position(config_b)
    start, end = _planar(config_a), _planar(config_b)
    walls = {}
    for quad in combinations(range(config_a.n), 4):
        poly = wall_polynomial([start[i] for i in quad], [end[i] for i in quad])
        if poly.is_zero:
            raise IdenticallyDegeneratePath(quad)
        walls[quad] = poly
    logger.debug("Built family on %d dots with %d wall polynomials.", config_a.n, len(walls))
    return Family(start, end, walls)


def detect_walls(family: Family, refine_limit: int = 4096) -> list:
    """All wall hits in (0, 1), ordered in time; tangential touches are returned with crossing=False."""
    brackets = []
    for quad, poly in family.walls.items():
        brackets.extend(brackets_for(quad, poly))
    events = []
    for bracket in separate(brackets, refine_limit):
        event = WallEvent(bracket.source, bracket.lo, bracket.hi, bracket.crossing,
                          sign_at(family.walls[bracket.source], bracket.hi))
        if not event.crossing:
            logger.warning("Dots %s touch a common circle in (%s, %s) without crossing it.",
                           event.labels, event.lo, event.hi)
        events.append(event)
    return events


# --- Classification ---

def _refine(family: Family, event: WallEvent) -> WallEvent:
    poly = family.walls[event.quadruple]
    mid = split_point(poly, event.lo, event.hi)
    if sign_at(poly, event.lo) != sign_at(poly, mid):
        return WallEvent(event.quadruple, event.lo, mid, event.crossing, event.direction)
    return WallEvent(event.quadruple, mid, event.hi, event.crossing, event.direction)


def _center_groups(family: Family, event: WallEvent, refine_limit: int):
    """
    Splits the eight oriented triples of the crossing quadruple by which of
    the two circle centers their left center approaches.

    A triple goes with the reference triple when their normals point the
    same way at the crossing. The bracket is refined until no alignment
    polynomial has a root in it, so the sign read at its end is the sign at
    the crossing itself.
    """
    quad = event.quadruple

    def normal(triple):
        return normal_path([family.start[i] for i in triple], [family.end[i] for i in triple])

    reference = normal(quad[:3])
    alignments = {triple: alignment_polynomial(normal(triple), reference) for triple in combinations(quad, 3)}
    for _ in range(refine_limit):
        if all(constant_sign_on(poly, event.lo, event.hi) for poly in alignments.values()):
            first, second = set(), set()
            for triple, poly in alignments.items():
                agrees = sign_at(poly, event.lo) is Sign.POSITIVE
                first.add((triple, not agrees))
                second.add((triple, agrees))
            return event, (frozenset(first), frozenset(second))
        event = _refine(family, event)
    raise NotSemigeneral([quad], "Could not resolve the circle centers of a wall crossing.")


def _outside_left(config: DotConfig, group, quad_mask: int) -> Optional[int]:
    counts = set()
    for triple, reversed_ in group:
        sides = config.sides(triple)
        near = sides.right if reversed_ else sides.left
        counts.add((near & ~quad_mask).bit_count())
    return counts.pop() if len(counts) == 1 else None


def _expected_kind(m: int, k: int) -> MoveKind:
    if m == k - 2:
        return MoveKind.SQUARE_MOVE
    if m == k - 3:
        return MoveKind.WHITE_RECONNECT
    if m == k - 1:
        return MoveKind.BLACK_RECONNECT
    return MoveKind.NO_OP


def _verify_center(kind: MoveKind, group, removed, added, k: int) -> bool:
    gone = [key for key in removed if (key.triple, key.reversed) in group]
    new = [key for key in added if (key.triple, key.reversed) in group]
    if kind is MoveKind.NO_OP:
        return not gone and not new
    if kind is MoveKind.SQUARE_MOVE:
        before = {(key.triple, key.reversed): key.near.bit_count() for key in gone}
        after = {(key.triple, key.reversed): key.near.bit_count() for key in new}
        return (len(gone) == len(new) == 4 and set(before) == set(group) == set(after)
                and all(before[t] != after[t] for t in before))
    size = k - 2 if kind is MoveKind.WHITE_RECONNECT else k - 1
    return (len(gone) == len(new) == 2
            and all(key.near.bit_count() == size for key in gone + new)
            and not {key.triple for key in gone} & {key.triple for key in new})


def _classify(family: Family, event: WallEvent, k: int, refine_limit: int):
    event, (first, second) = _center_groups(family, event, refine_limit)
    config_before, config_after = family.config_at(event.lo), family.config_at(event.hi)
    graph_before, graph_after = build_graph(config_before, k), build_graph(config_after, k)
    keys_before, keys_after = graph_before.vertex_keys, graph_after.vertex_keys
    removed, added = keys_before - keys_after, keys_after - keys_before

    quad = set(event.quadruple)
    strays = [key for key in removed | added if not set(key.triple) <= quad]
    if strays:
        raise NonLocalChange(
            f"Crossing of {event.labels} changed vertices away from it: "
            + ", ".join(format_vertex_key(key) for key in sorted(strays)))

    quad_mask = mask_of(event.quadruple)
    m_first = _outside_left(config_before, first, quad_mask)
    if m_first is None or m_first != _outside_left(config_after, first, quad_mask):
        raise InternalInconsistency(f"Dots away from {event.labels} disagree about the crossing circle.")
    m_second = config_before.n - 4 - m_first

    kinds = []
    for group, m in ((first, m_first), (second, m_second)):
        kind = _expected_kind(m, k)
        if not _verify_center(kind, group, removed, added, k):
            raise InternalInconsistency(
                f"Crossing of {event.labels} does not match a {kind.value} at a center with {m} dots outside on the left.")
        kinds.append((kind, m))
    if kinds[0][0] is MoveKind.NO_OP and kinds[1][0] is not MoveKind.NO_OP:
        kinds.reverse()
    (kind, m_primary), (other, m_other) = kinds

    counts_before, counts_after = strata_counts(graph_before), strata_counts(graph_after)
    if counts_before != counts_after:
        raise InternalInconsistency(f"Crossing of {event.labels} changed the counts {counts_before} -> {counts_after}.")

    paired = kind is not MoveKind.NO_OP and other is not MoveKind.NO_OP
    move = MoveEvent(event, kind, frozenset(removed), frozenset(added), paired,
                     other if other is not MoveKind.NO_OP else None,
                     counts_before, counts_after, (m_primary, m_other))
    return move, keys_before, keys_after


def classify_move(family: Family, event: WallEvent, k: int, refine_limit: int = 4096) -> MoveEvent:
    if not event.crossing:
        raise ValueError("Tangential touches do not induce moves.")
    move, _, _ = _classify(family, event, k, refine_limit)
    return move


def move_sequence(config_a: DotConfig, config_b: DotConfig, k: int, refine_limit: int = 4096) -> MoveLog:
    family = make_family(config_a, config_b)
    running = build_graph(config_a, k).vertex_keys
    events, touches = [], []
    for wall in detect_walls(family, refine_limit):
        if not wall.crossing:
            touches.append(wall)
            continue
        move, keys_before, keys_after = _classify(family, wall, k, refine_limit)
        if keys_before != running:
            raise InternalInconsistency(f"Graph before the crossing of {wall.labels} differs from the replayed graph.")
        running = (running - move.removed) | move.added
        logger.info("t in (%s, %s): dots %s, %s%s", move.wall.lo, move.wall.hi, wall.labels, move.kind.value,
                    f" paired with {move.second_kind.value}" if move.antipodal_paired else "")
        events.append(move)
    if running != build_graph(config_b, k).vertex_keys:
        raise InternalInconsistency("Replaying the moves does not reproduce the end graph.")
    return MoveLog(k, tuple(events), tuple(touches), end=config_b)


# --- Perturbation and retries ---

def perturb_config(config: DotConfig, rng: random.Random, denominator: int = 1024, attempts: int = 100,
                   k: Optional[int] = None) -> DotConfig:
    """
    Moves every planar coordinate by +-1/denominator, redrawing until the
    result is in general position. With `k`, the jitter must also keep the
    order-k graph of `config`; a draw that changes it halves the jitter.
    """
    planar = _planar(config)
    target = build_graph(config, k).vertex_keys if k is not None else None
    for _ in range(attempts):
        jittered = DotConfig.from_planar(
            PlanarPoint(p.u + Fraction(rng.choice((-1, 1)), denominator),
                        p.v + Fraction(rng.choice((-1, 1)), denominator)) for p in planar)
        if not is_general_position(jittered):
            continue
        if target is None or build_graph(jittered, k).vertex_keys == target:
            return jittered
        logger.debug("Jitter of 1/%d changed the order-%d graph; halving it.", denominator, k)
        denominator *= 2
    raise RetriesExhausted(f"No jitter down to 1/{denominator} gave a configuration in general position"
                           + (f" with the same order-{k} graph." if k is not None else "."))


def move_sequence_with_retry(config_a: DotConfig, config_b: DotConfig, k: int, max_retries: int = 5,
                             seed: int = 0, denominator: int = 1024, refine_limit: int = 4096) -> MoveLog:
    rng = random.Random(seed)
    end = config_b
    for attempt in range(1, max_retries + 2):
        try:
            log = move_sequence(config_a, end, k, refine_limit)
        except (NotSemigeneral, IdenticallyDegeneratePath) as e:
            logger.warning("Attempt %d: %s Perturbing the end configuration.", attempt, e)
            end = perturb_config(config_b, rng, denominator, k=k)
            continue
        perturbed = end is not config_b
        match = True
        if perturbed:
            match = build_graph(end, k).vertex_keys == build_graph(config_b, k).vertex_keys
        return MoveLog(k, log.events, log.touches, attempt, perturbed, end, match)
    raise RetriesExhausted(f"Family still degenerate after {max_retries} perturbations.")
