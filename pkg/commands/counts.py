import logging

import click

from sphere import formulas
from sphere.circles import (avoidant_partition_count, count_oriented_incident, hull_edge_count, hull_face_count,
                            incident_histogram, planar_interior_histogram)
from sphere.errors import EXIT_CHECK_FAILED, EXIT_OK
from sphere.geom_core import DotConfig, is_planar_general_position, require_general_position
from sphere.schemas import CountsReport, HistogramEntry, InteriorEntry

from .common import emit, execute, input_options, resolve_config

logger = logging.getLogger(__name__)


def counts_report(config: DotConfig) -> CountsReport:
    require_general_position(config)
    n = config.n
    incident = [HistogramEntry(k=k, l=l, count=count, expected=formulas.incident_pair(k, l))
                for (k, l), count in incident_histogram(config).items()]
    avoidant = []
    if n >= 4:
        for k, l in formulas.avoidant_pairs(n):
            avoidant.append(HistogramEntry(k=k, l=l, count=avoidant_partition_count(config, k, l),
                                           expected=formulas.avoidant_pair(k, l)))
    oriented = {str(k): count_oriented_incident(config, k) for k in range(n - 2)}

    interior = []
    if is_planar_general_position(config):
        interior = [InteriorEntry(interior=c, count=count) for c, count in planar_interior_histogram(config).items()]
    else:
        logger.warning("Three dots are collinear in the plane; skipping the planar interior histogram.")

    hull_faces = hull_edges = None
    match = all(e.count == e.expected for e in incident + avoidant)
    match = match and all(count == formulas.oriented_incident(int(k), n) for k, count in oriented.items())
    if n >= 4:
        hull_faces, hull_edges = hull_face_count(config), hull_edge_count(config)
        match = match and (hull_faces, hull_edges) == (formulas.hull_faces(n), formulas.hull_edges(n))

    return CountsReport(n=n, incident_histogram=incident, avoidant=avoidant, oriented_incident=oriented,
                        hull_faces=hull_faces, hull_edges=hull_edges, planar_interior_histogram=interior,
                        formula_match=match)


@click.command('counts')
@input_options()
@click.option('--out', type=click.Path(dir_okay=False), default=None, help="Output file (stdout if omitted).")
def counts(input, config_name, out):
    """Counts incident and avoidant circles and compares them with the closed forms."""
    def action(settings):
        report = counts_report(resolve_config(input, config_name))
        emit(report, out)
        return (EXIT_OK if report.formula_match else EXIT_CHECK_FAILED), {"n": report.n, "formula_match": report.formula_match}

    execute('counts', {"input": input, "config_name": config_name, "out": out}, action)
