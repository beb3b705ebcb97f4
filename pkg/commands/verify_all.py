import logging

import click

from sphere.errors import EXIT_CHECK_FAILED, EXIT_OK
from sphere.verify_tasks import verify_grid
from utils.settings_manager import parse_range

from .common import emit, execute

logger = logging.getLogger(__name__)


@click.command('verify-all')
@click.option('--grid', default=None, help="Range of n, e.g. '4-10' (defaults to DOTS_DEFAULT_GRID).")
@click.option('--k-range', 'k_range', default=None, help="Only check orders k in this range, e.g. '2-3' (every order if omitted).")
@click.option('--seeds', type=click.IntRange(min=1), default=None, help="Seeds per n (defaults to DOTS_DEFAULT_SEEDS).")
@click.option('--workers', type=click.IntRange(min=1), default=None, help="Concurrent grid cells.")
@click.option('--out', type=click.Path(dir_okay=False), default=None, help="Summary JSON file (stdout if omitted).")
def verify_all(grid, k_range, seeds, workers, out):
    """Runs every consistency check over a grid of seeded random configurations."""
    def update_progress(text, **extra):
        logger.info(text)

    def action(settings):
        try:
            n_range = parse_range(grid or settings.default_grid)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint='--grid')
        try:
            orders = parse_range(k_range) if k_range else None
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint='--k-range')
        summary = verify_grid(
            update_progress, n_range, seeds or settings.default_seeds,
            max_concurrency=workers or settings.max_concurrent_cells,
            oracle_max_n=settings.oracle_max_n, bound=settings.coordinate_bound,
            max_retries=settings.max_retries, jitter_denominator=settings.jitter_denominator,
            refine_limit=settings.refine_limit, k_range=orders,
        )
        emit(summary, out)
        failed = [c.name for c in summary.checks if not c.passed]
        if failed:
            logger.warning("Failed checks: %s", ", ".join(failed))
        return (EXIT_OK if summary.passed else EXIT_CHECK_FAILED), {"passed": summary.passed, "failed": failed}

    execute('verify-all', {"grid": grid, "k_range": k_range, "seeds": seeds, "workers": workers, "out": out}, action)
