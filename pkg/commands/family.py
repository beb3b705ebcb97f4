import click

from sphere.dynamics import MoveLog, move_sequence_with_retry
from sphere.errors import EXIT_CHECK_FAILED, EXIT_OK
from sphere.geom_core import format_rational
from sphere.schemas import ConfigurationFile, MoveEventModel, MoveLogReport, StrataModel, WallModel
from sphere.voronoi import format_vertex_key

from .common import emit, execute, input_options, resolve_config


def move_log_report(log: MoveLog, n: int) -> MoveLogReport:
    events = []
    for move in log.events:
        wall = move.wall
        events.append(MoveEventModel(
            quadruple=wall.labels,
            interval=[format_rational(wall.lo), format_rational(wall.hi)],
            kind=move.kind.value,
            antipodal_paired=move.antipodal_paired,
            second_kind=move.second_kind.value if move.second_kind else None,
            direction=int(wall.direction),
            outside_left=list(move.outside_left),
            removed=sorted(format_vertex_key(key) for key in move.removed),
            added=sorted(format_vertex_key(key) for key in move.added),
            counts_before=StrataModel.from_tuple(move.counts_before),
            counts_after=StrataModel.from_tuple(move.counts_after),
        ))
    touches = [WallModel(quadruple=t.labels, interval=[format_rational(t.lo), format_rational(t.hi)],
                         crossing=False, direction=int(t.direction)) for t in log.touches]
    end_config = ConfigurationFile.from_config(log.end, name="perturbed-end") if log.perturbed else None
    return MoveLogReport(n=n, k=log.k, attempts=log.attempts, perturbed=log.perturbed,
                         endpoint_match=log.endpoint_match, events=events, touches=touches, end_config=end_config)


@click.command('family')
@input_options()
@input_options(suffix="_b", flag="--input-b", name_flag="--config-name-b")
@click.option('--k', 'k', type=int, required=True, help="Order of the decomposition, 0 < k < n.")
@click.option('--seed', type=int, default=0, show_default=True, help="Seed of the endpoint perturbations.")
@click.option('--max-retries', type=click.IntRange(min=0), default=None,
              help="Perturbations allowed for degenerate families (defaults to DOTS_MAX_RETRIES).")
@click.option('--out', type=click.Path(dir_okay=False), default=None, help="Move-log JSON file (stdout if omitted).")
def family(input, config_name, input_b, config_name_b, k, seed, max_retries, out):
    """Moves the dots linearly from one configuration to another and logs the moves of the order-K graph."""
    def action(settings):
        config_a = resolve_config(input, config_name)
        config_b = resolve_config(input_b, config_name_b, flag="--input-b")
        retries = settings.max_retries if max_retries is None else max_retries
        log = move_sequence_with_retry(config_a, config_b, k, retries, seed,
                                       settings.jitter_denominator, settings.refine_limit)
        report = move_log_report(log, config_a.n)
        emit(report, out)
        summary = {"events": len(report.events), "attempts": report.attempts, "endpoint_match": report.endpoint_match}
        return (EXIT_OK if report.endpoint_match else EXIT_CHECK_FAILED), summary

    execute('family', {"input": input, "config_name": config_name, "input_b": input_b,
                       "config_name_b": config_name_b, "k": k, "seed": seed, "max_retries": max_retries,
                       "out": out}, action)
