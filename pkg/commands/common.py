"""
Helpers shared by the commands: input resolution, output, and the
boundary where library exceptions become exit codes.
"""

import json
import logging

import click

from sphere.errors import EXIT_BAD_INPUT, EXIT_OK, GeometryError
from sphere.schemas import dump_model, read_configuration, write_model
from utils.config_loader import load_named_configuration
from utils.logger import log_invocation, log_run
from utils.settings_manager import get_settings

logger = logging.getLogger(__name__)


def input_options(suffix="", flag="--input", name_flag="--config-name"):
    """Adds a --input PATH / --config-name NAME pair to a command."""
    def decorator(fn):
        fn = click.option(name_flag, f"config_name{suffix}", default=None,
                          help="Use a named configuration from config/configurations.json instead of a file.")(fn)
        fn = click.option(flag, f"input{suffix}", type=click.Path(dir_okay=False), default=None,
                          help="Configuration JSON file.")(fn)
        return fn
    return decorator


def resolve_config(path, name, flag="--input"):
    if bool(path) == bool(name):
        raise click.UsageError(f"Give exactly one of {flag} or --config-name.")
    if name:
        return load_named_configuration(name)
    return read_configuration(path)


def emit(model, out):
    if out and out != '-':
        write_model(model, out)
    else:
        click.echo(dump_model(model), nl=False)


def execute(command, params, action):
    """
    Runs `action(settings) -> (exit_code, summary)` and exits with its
    status. Library errors are reported on stderr with their exit code.
    """
    settings = get_settings()
    log_invocation(command, params)
    summary = None
    try:
        exit_code, summary = action(settings)
    except GeometryError as e:
        logging.getLogger(f"commands.{command}").error(str(e))
        click.echo(json.dumps(e.details()), err=True)
        exit_code, summary = e.exit_code, e.details()
    except OSError as e:
        logging.getLogger(f"commands.{command}").error(f"I/O error: {e}")
        click.echo(json.dumps({"error": "OSError", "message": str(e)}), err=True)
        exit_code, summary = EXIT_BAD_INPUT, {"error": str(e)}

    if settings.store_logs_enabled:
        log_run(command, params, summary, exit_code, command, settings.logs_directory)
    if exit_code != EXIT_OK:
        click.get_current_context().exit(exit_code)
