import random

import click

from sphere.errors import EXIT_OK
from sphere.geom_core import random_config
from sphere.schemas import ConfigurationFile

from .common import emit, execute


@click.command('generate')
@click.option('--n', 'n', type=click.IntRange(min=1), required=True, help="Number of dots.")
@click.option('--seed', type=int, default=0, show_default=True, help="Seed of the rejection sampler.")
@click.option('--bound', type=click.IntRange(min=1), default=None,
              help="Bound on numerators and denominators (defaults to DOTS_COORDINATE_BOUND).")
@click.option('--out', type=click.Path(dir_okay=False), default=None, help="Output file (stdout if omitted).")
def generate(n, seed, bound, out):
    """Writes a seeded random configuration of N dots in general position."""
    def action(settings):
        config = random_config(n, random.Random(seed), bound or settings.coordinate_bound)
        emit(ConfigurationFile.from_config(config, name=f"random-n{n}-seed{seed}"), out)
        return EXIT_OK, {"n": n, "seed": seed}

    execute('generate', {"n": n, "seed": seed, "bound": bound, "out": out}, action)
