"""
Combinatorial k-th order Voronoi decomposition of the sphere.

Vertices are oriented incident circles with k-2 (white) or k-1 (black) dots
on their left; each vertex names its three edges by key, and grouping the
keys pairs the vertices up. No coordinates are involved.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional

import networkx as nx

from .circles import count_oriented_incident, enumerate_separable, planar_interior_histogram
from .errors import IndexOutOfRange, InternalInconsistency, SizeMismatch, WrongOrder
from .geom_core import DotConfig, PlanarPoint, dot, lift, mask_of, random_rational, require_general_position

logger = logging.getLogger(__name__)


class Color(Enum):
    WHITE = "white"
    BLACK = "black"


class VertexKey(NamedTuple):
    triple: tuple
    reversed: bool
    near: int


class EdgeKey(NamedTuple):
    pair: tuple
    near: int


@dataclass(frozen=True)
class VoronoiVertex:
    key: VertexKey
    color: Color

    @property
    def edge_keys(self) -> list:
        triple, near = self.key.triple, self.key.near
        keys = []
        for z in triple:
            pair = tuple(i for i in triple if i != z)
            # white vertices push the third dot into the near set, black ones drop it
            keys.append(EdgeKey(pair, near | (1 << z) if self.color is Color.WHITE else near))
        return keys


@dataclass(frozen=True)
class VoronoiEdge:
    key: EdgeKey
    endpoints: tuple

    @property
    def regions(self) -> tuple:
        i, j = self.key.pair
        return (self.key.near | (1 << i), self.key.near | (1 << j))


@dataclass(frozen=True)
class VoronoiGraph:
    config: DotConfig
    k: int
    vertices: tuple
    edges: tuple
    regions: tuple
    vertex_edges: dict = field(compare=False, repr=False, default_factory=dict)

    @property
    def vertex_keys(self) -> frozenset:
        return frozenset(v.key for v in self.vertices)

    @property
    def edge_keys(self) -> frozenset:
        return frozenset(e.key for e in self.edges)

    def color_of(self, key: VertexKey) -> Color:
        return Color.WHITE if key.near.bit_count() == self.k - 2 else Color.BLACK


def _check_order(config: DotConfig, k: int):
    if config.n < 4:
        raise SizeMismatch(f"The decomposition needs at least 4 dots (got {config.n}).")
    if not 0 < k < config.n:
        raise IndexOutOfRange(f"k must lie in 1..{config.n - 1} (got {k}).")


def vertex_keys(config: DotConfig, k: int) -> list:
    """Vertices of the order-k decomposition, without building edges or regions."""
    vertices = []
    for triple, sides in config.side_table.items():
        for reversed_, near in ((False, sides.left), (True, sides.right)):
            size = near.bit_count()
            if size == k - 2:
                vertices.append(VoronoiVertex(VertexKey(triple, reversed_, near), Color.WHITE))
            elif size == k - 1:
                vertices.append(VoronoiVertex(VertexKey(triple, reversed_, near), Color.BLACK))
    return sorted(vertices, key=lambda v: v.key)


def build_graph(config: DotConfig, k: int) -> VoronoiGraph:
    _check_order(config, k)
    require_general_position(config)

    vertices = vertex_keys(config, k)
    groups = defaultdict(list)
    vertex_edges = {}
    for vertex in vertices:
        keys = vertex.edge_keys
        vertex_edges[vertex.key] = tuple(keys)
        for key in keys:
            groups[key].append(vertex.key)

    edges = []
    for key in sorted(groups):
        ends = groups[key]
        if len(ends) != 2:
            raise InternalInconsistency(
                f"Edge {format_edge_key(key)} collects {len(ends)} vertices instead of 2.")
        edges.append(VoronoiEdge(key, tuple(ends)))

    regions = tuple(sorted(enumerate_separable(config, k)))
    region_set = set(regions)
    for edge in edges:
        for region in edge.regions:
            if region not in region_set:
                raise InternalInconsistency(
                    f"Edge {format_edge_key(edge.key)} borders a non-separable set {format_mask(region)}.")

    logger.debug("Built order-%d graph on %d dots: %d vertices, %d edges, %d regions.",
                 k, config.n, len(vertices), len(edges), len(regions))
    return VoronoiGraph(config, k, tuple(vertices), tuple(edges), regions, vertex_edges)


def strata_counts(graph: VoronoiGraph) -> tuple:
    whites = sum(1 for v in graph.vertices if v.color is Color.WHITE)
    return (whites, len(graph.vertices) - whites, len(graph.edges), len(graph.regions))


def euler_characteristic(graph: VoronoiGraph) -> int:
    return len(graph.vertices) - len(graph.edges) + len(graph.regions)


def to_networkx(graph: VoronoiGraph) -> nx.MultiGraph:
    g = nx.MultiGraph()
    for vertex in graph.vertices:
        g.add_node(vertex.key, color=vertex.color.value)
    for edge in graph.edges:
        g.add_edge(*edge.endpoints, key=edge.key)
    return g


def is_connected(graph: VoronoiGraph) -> bool:
    if not graph.vertices:
        return True
    return nx.is_connected(to_networkx(graph))


def is_three_regular(graph: VoronoiGraph) -> bool:
    g = to_networkx(graph)
    return all(degree == 3 for _, degree in g.degree())


# --- Points of the sphere ---

def near_far_split(config: DotConfig, k: int, p) -> tuple:
    """
    (D-, D+) for a direction p: D- holds the dots at worst tied for k-th
    closest, D+ the dots at best tied for (k+1)-th closest.
    """
    if not 0 < k < config.n:
        raise IndexOutOfRange(f"k must lie in 1..{config.n - 1} (got {k}).")
    closeness = [dot(p, d) for d in config.dots]
    ranked = sorted(closeness, reverse=True)
    kth, next_ = ranked[k - 1], ranked[k]
    minus = mask_of(i for i, c in enumerate(closeness) if c >= kth)
    plus = mask_of(i for i, c in enumerate(closeness) if c <= next_)
    return minus, plus


class StratumKind(Enum):
    REGION = "region"
    EDGE = "edge"
    VERTEX = "vertex"


@dataclass(frozen=True)
class Stratum:
    kind: StratumKind
    key: object


def stratum_of(config: DotConfig, k: int, p) -> Stratum:
    minus, plus = near_far_split(config, k, p)
    tied = minus & plus
    strict = minus & ~tied
    size = tied.bit_count()
    if size == 0:
        return Stratum(StratumKind.REGION, minus)
    if size == 2:
        pair = tuple(i for i in range(config.n) if tied >> i & 1)
        return Stratum(StratumKind.EDGE, EdgeKey(pair, strict))
    if size == 3:
        triple = tuple(i for i in range(config.n) if tied >> i & 1)
        sides = config.sides(triple)
        if strict == sides.left:
            return Stratum(StratumKind.VERTEX, VertexKey(triple, False, strict))
        if strict == sides.right:
            return Stratum(StratumKind.VERTEX, VertexKey(triple, True, strict))
    raise InternalInconsistency(f"Direction {p} ties {size} dots; no stratum of a general configuration does.")


def sample_regions(config: DotConfig, k: int, rng, samples: int, bound: int = 64) -> list:
    """Near sets of random lifted planar directions that fall strictly inside a region."""
    found = []
    for _ in range(samples):
        p = lift(PlanarPoint(random_rational(rng, bound), random_rational(rng, bound)))
        stratum = stratum_of(config, k, p)
        if stratum.kind is StratumKind.REGION:
            found.append(stratum.key)
    return found


def region_sampling_check(graph: VoronoiGraph, rng, samples: int = 20) -> bool:
    regions = set(graph.regions)
    for near in sample_regions(graph.config, graph.k, rng, samples):
        if near not in regions:
            logger.warning("Sampled direction lands in %s, which is not a region of the graph.", format_mask(near))
            return False
    return True


# --- Symmetry and gluing ---

def antipodal_image(graph: VoronoiGraph, key):
    full = graph.config.full_mask
    if isinstance(key, VertexKey):
        return VertexKey(key.triple, not key.reversed, full & ~(key.near | mask_of(key.triple)))
    if isinstance(key, EdgeKey):
        return EdgeKey(key.pair, full & ~(key.near | mask_of(key.pair)))
    return full & ~key


def antipodal_check(graph: VoronoiGraph) -> bool:
    """Whether the antipodal map preserves the order-n/2 decomposition and swaps vertex colors."""
    if graph.config.n != 2 * graph.k:
        raise WrongOrder(f"The antipodal symmetry needs n = 2k (got n={graph.config.n}, k={graph.k}).")
    colors = {v.key: v.color for v in graph.vertices}
    for key, color in colors.items():
        image = antipodal_image(graph, key)
        if image not in colors or colors[image] is color:
            return False
    edges = graph.edge_keys
    if any(antipodal_image(graph, key) not in edges for key in edges):
        return False
    regions = set(graph.regions)
    return all(antipodal_image(graph, region) in regions for region in regions)


def gluing_count_check(config: DotConfig, k: int) -> bool:
    """White vertices at order k against incident circles with k-2 or n-k-1 dots inside their planar image."""
    if not 2 <= k <= config.n - 1:
        raise IndexOutOfRange(f"k must lie in 2..{config.n - 1} (got {k}).")
    whites = count_oriented_incident(config, k - 2)
    histogram = planar_interior_histogram(config)
    return whites == histogram.get(k - 2, 0) + histogram.get(config.n - k - 1, 0)


# --- Labels ---

def format_mask(mask: int) -> str:
    labels = [str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(labels) + "}"


def format_edge_key(key: EdgeKey) -> str:
    i, j = key.pair
    return f"{{{i + 1},{j + 1}}}|{format_mask(key.near)}"


def format_vertex_key(key: VertexKey, color: Optional[Color] = None) -> str:
    triple = ",".join(str(i + 1) for i in (reversed(key.triple) if key.reversed else key.triple))
    label = f"({triple})|{format_mask(key.near)}"
    return f"{color.value}:{label}" if color else label
