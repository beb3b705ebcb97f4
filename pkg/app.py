import click
from dotenv import load_dotenv

load_dotenv()

# Import utility functions and commands
from sphere import __version__
from utils.logger import setup_logging
from utils.settings_manager import get_settings
from commands.generate import generate
from commands.counts import counts
from commands.voronoi import voronoi
from commands.family import family
from commands.verify_all import verify_all


@click.group()
@click.version_option(__version__, prog_name='dots')
def cli():
    """Exact computations on dots on the unit sphere."""
    settings = get_settings()
    setup_logging(settings.logs_directory, settings.log_level)


# Register commands
cli.add_command(generate)
cli.add_command(counts)
cli.add_command(voronoi)
cli.add_command(family)
cli.add_command(verify_all)


if __name__ == '__main__':
    cli()
