# --- START OF FILE utils/config_loader.py ---
import os
import json
import logging

from sphere.errors import ConfigParseError
from sphere.schemas import ConfigurationFile

logger = logging.getLogger(__name__)

NAMED_CONFIG_FILE = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'config', 'configurations.json')


def load_config_file(filepath, default=None):
    """Loads a JSON configuration file.

    Returns `default` (an empty dict unless given) if the file is missing
    or cannot be decoded.
    """
    default = {} if default is None else default
    try:
        with open(filepath, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        logger.warning(f"Configuration file {filepath} not found. Using empty default.")
        return default
    except json.JSONDecodeError:
        logger.warning(f"Error decoding JSON from {filepath}. Using empty default.")
        return default
    except Exception as e:
        logger.error(f"An unexpected error occurred loading {filepath}: {e}")
        return default


def load_named_configuration(name, filepath=NAMED_CONFIG_FILE):
    """Returns the DotConfig stored under `name` in the named configurations file."""
    entries = load_config_file(filepath)
    if name not in entries:
        known = ", ".join(sorted(entries)) or "none"
        raise ConfigParseError(f"No configuration named '{name}' (known: {known}).")
    try:
        document = ConfigurationFile.model_validate({"name": name, **entries[name]})
    except ValueError as e:
        raise ConfigParseError(f"Configuration '{name}' in {filepath} is invalid: {e}")
    return document.to_config()

# --- END OF FILE utils/config_loader.py ---
