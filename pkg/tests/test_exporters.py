import json

from sphere.exporters import graph_report, to_dot, write_dot, write_svg
from sphere.voronoi import build_graph


def test_graph_report(named):
    graph = build_graph(named("six-dots"), 3)
    report = graph_report(graph)
    assert report.formula_match
    assert (report.counts.whites, report.counts.blacks, report.counts.edges, report.counts.regions) == (12, 12, 36, 14)
    assert report.euler_characteristic == 2
    assert report.connected
    assert report.antipodal is True
    assert report.gluing is True
    assert len(report.vertices) == 24
    assert all(len(v.center) == 3 for v in report.vertices)
    assert all(len(e.regions) == 2 for e in report.edges)
    assert report.config.dots[0].u == "1"


def test_graph_report_skips_inapplicable_checks(named):
    report = graph_report(build_graph(named("six-dots"), 1))
    assert report.antipodal is None
    assert report.gluing is None
    report = graph_report(build_graph(named("six-dots"), 2), with_checks=False)
    assert report.antipodal is None
    assert report.gluing is None


def test_dot_export(named, tmp_path):
    graph = build_graph(named("center-and-triangle"), 2)
    text = to_dot(graph)
    assert text.startswith("graph order_2 {")
    assert text.count('[color="white"]') == 4
    assert text.count('[color="black"]') == 4
    assert text.count(" -- ") == 12
    path = tmp_path / "graph.dot"
    write_dot(graph, str(path))
    assert path.read_text(encoding="utf-8") == text
    # deterministic for diffs
    assert to_dot(build_graph(named("center-and-triangle"), 2)) == text


def test_svg_export(named, tmp_path):
    path = tmp_path / "graph.svg"
    write_svg(build_graph(named("five-dots"), 2), str(path))
    assert "<svg" in path.read_text(encoding="utf-8")


def test_report_serializes(named):
    report = graph_report(build_graph(named("two-pairs"), 2))
    payload = json.loads(report.model_dump_json())
    assert payload["counts"] == {"whites": 4, "blacks": 4, "edges": 12, "regions": 6}
    assert payload["n"] == 4
