"""
Presentation artifacts for order-k Voronoi graphs: JSON report, Graphviz
DOT and an SVG drawing in the stereographic chart. Floating point appears
only here.
"""

import logging

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import formulas  # noqa: E402
from .geom_core import circumcenter_numeric, labels_of  # noqa: E402
from .schemas import ConfigurationFile, EdgeModel, GraphReport, StrataModel, VertexModel  # noqa: E402
from .voronoi import (VoronoiGraph, antipodal_check, euler_characteristic, format_edge_key,  # noqa: E402
                      format_vertex_key, gluing_count_check, is_connected, strata_counts)

logger = logging.getLogger(__name__)


def vertex_center(graph: VoronoiGraph, key) -> np.ndarray:
    center = circumcenter_numeric(graph.config, key.triple)
    return -center if key.reversed else center


def graph_report(graph: VoronoiGraph, with_checks: bool = True) -> GraphReport:
    config, k = graph.config, graph.k
    counts = strata_counts(graph)
    expected = formulas.strata(k, config.n)
    antipodal = gluing = None
    if with_checks:
        if config.n == 2 * k:
            antipodal = antipodal_check(graph)
        if 2 <= k <= config.n - 1:
            gluing = gluing_count_check(config, k)

    vertices = []
    for vertex in graph.vertices:
        key = vertex.key
        order = tuple(reversed(key.triple)) if key.reversed else key.triple
        vertices.append(VertexModel(
            label=format_vertex_key(key),
            triple=[i + 1 for i in order],
            color=vertex.color.value,
            near=labels_of(key.near),
            center=[round(float(x), 12) for x in vertex_center(graph, key)],
        ))
    edges = []
    for edge in graph.edges:
        edges.append(EdgeModel(
            label=format_edge_key(edge.key),
            pair=[i + 1 for i in edge.key.pair],
            near=labels_of(edge.key.near),
            endpoints=[format_vertex_key(v) for v in edge.endpoints],
            regions=[labels_of(r) for r in edge.regions],
        ))
    return GraphReport(
        n=config.n,
        k=k,
        counts=StrataModel.from_tuple(counts),
        expected=StrataModel.from_tuple(expected),
        formula_match=counts == expected,
        euler_characteristic=euler_characteristic(graph),
        connected=is_connected(graph),
        antipodal=antipodal,
        gluing=gluing,
        vertices=vertices,
        edges=edges,
        regions=[labels_of(r) for r in graph.regions],
        config=ConfigurationFile.from_config(config),
    )


def to_dot(graph: VoronoiGraph) -> str:
    lines = [f"graph order_{graph.k} {{"]
    for vertex in graph.vertices:
        lines.append(f'  "{format_vertex_key(vertex.key)}" [color="{vertex.color.value}"];')
    for edge in graph.edges:
        a, b = (format_vertex_key(v) for v in edge.endpoints)
        lines.append(f'  "{a}" -- "{b}" [label="{format_edge_key(edge.key)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(graph: VoronoiGraph, path: str):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(to_dot(graph))


def _slerp(a: np.ndarray, b: np.ndarray, steps: int) -> np.ndarray:
    angle = np.arccos(np.clip(np.dot(a, b), -1.0, 1.0))
    if angle < 1e-9:
        return np.array([a, b])
    t = np.linspace(0.0, 1.0, steps)[:, None]
    return (np.sin((1 - t) * angle) * a + np.sin(t * angle) * b) / np.sin(angle)


def _chart(points: np.ndarray) -> np.ndarray:
    """Stereographic projection from (0,0,1); points near the pole are dropped."""
    points = points[points[:, 2] < 0.995]
    return points[:, :2] / (1.0 - points[:, 2:3])


def write_svg(graph: VoronoiGraph, path: str, steps: int = 48):
    figure, axes = plt.subplots(figsize=(8, 8))
    try:
        for edge in graph.edges:
            a, b = (vertex_center(graph, key) for key in edge.endpoints)
            arc = _chart(_slerp(a, b, steps))
            if len(arc):
                axes.plot(arc[:, 0], arc[:, 1], color="0.4", linewidth=0.8)
        for vertex in graph.vertices:
            point = _chart(vertex_center(graph, vertex.key)[None, :])
            if len(point):
                axes.scatter(point[:, 0], point[:, 1], s=30, zorder=3, edgecolors="black",
                             facecolors=vertex.color.value)
        for index, d in enumerate(graph.config.dots):
            point = _chart(np.array([[float(c) for c in d.as_tuple()]]))
            if not len(point):
                continue
            u, v = point[0]
            axes.scatter([u], [v], s=12, color="tab:red", zorder=4)
            axes.annotate(str(index + 1), (u, v), textcoords="offset points", xytext=(3, 3), fontsize=8)
        axes.set_aspect("equal")
        axes.set_title(f"order {graph.k}, {graph.config.n} dots")
        figure.savefig(path, format="svg")
    finally:
        plt.close(figure)
    logger.debug("Wrote SVG drawing with %d edges to %s.", len(graph.edges), path)
