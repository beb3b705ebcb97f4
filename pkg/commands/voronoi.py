import click

from sphere.errors import EXIT_CHECK_FAILED, EXIT_OK
from sphere.exporters import graph_report, write_dot, write_svg
from sphere.voronoi import build_graph

from .common import emit, execute, input_options, resolve_config


@click.command('voronoi')
@input_options()
@click.option('--k', 'k', type=int, required=True, help="Order of the decomposition, 0 < k < n.")
@click.option('--out', type=click.Path(dir_okay=False), default=None, help="Graph JSON file (stdout if omitted).")
@click.option('--dot', 'dot_path', type=click.Path(dir_okay=False), default=None, help="Also write a Graphviz DOT file.")
@click.option('--svg', 'svg_path', type=click.Path(dir_okay=False), default=None, help="Also write an SVG drawing.")
def voronoi(input, config_name, k, out, dot_path, svg_path):
    """Builds the bicolored order-K Voronoi graph and checks its counts."""
    def action(settings):
        graph = build_graph(resolve_config(input, config_name), k)
        report = graph_report(graph)
        emit(report, out)
        if dot_path:
            write_dot(graph, dot_path)
        if svg_path:
            write_svg(graph, svg_path)
        ok = (report.formula_match and report.euler_characteristic == 2 and report.connected
              and report.antipodal is not False and report.gluing is not False)
        summary = {"n": report.n, "k": k, "counts": report.counts.model_dump(), "formula_match": report.formula_match,
                   "antipodal": report.antipodal, "gluing": report.gluing}
        return (EXIT_OK if ok else EXIT_CHECK_FAILED), summary

    execute('voronoi', {"input": input, "config_name": config_name, "k": k, "out": out,
                        "dot": dot_path, "svg": svg_path}, action)
