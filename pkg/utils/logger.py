# --- START OF FILE utils/logger.py ---

import os
import logging
from logging.handlers import RotatingFileHandler
import json


def setup_logging(logs_directory: str = 'logs', level: str = 'INFO'):
    """
    Configures the root logger for general events (startup, progress, warnings).
    Logs go to 'system.log' and to stderr; stdout is left to the JSON results.
    Per-command run logging is handled separately.
    """
    os.makedirs(logs_directory, exist_ok=True)

    root_logger = logging.getLogger()

    if not root_logger.hasHandlers():
        root_logger.setLevel(getattr(logging, level.upper(), logging.INFO))
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

        # General system log handler
        file_handler = RotatingFileHandler(
            os.path.join(logs_directory, 'system.log'),
            maxBytes=1024 * 1024 * 2,  # 2 MB
            backupCount=3
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

        # Console handler
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

        root_logger.debug("System logging configured.")


def get_run_logger(command: str, logs_directory: str = 'logs') -> logging.Logger:
    """
    Gets the logger for one command (generate, counts, ...).
    Each command logs its runs to its own file.
    """
    safe_filename = "".join([c for c in command if c.isalnum() or c in '-_']) + ".log"
    log_path = os.path.join(logs_directory, safe_filename)

    logger = logging.getLogger(f"runs.{command}")

    # Re-target the handler when the logs directory changed since the last run
    for handler in list(logger.handlers):
        if getattr(handler, 'baseFilename', None) != os.path.abspath(log_path):
            logger.removeHandler(handler)
            handler.close()

    if not logger.handlers:
        os.makedirs(logs_directory, exist_ok=True)
        logger.setLevel(logging.INFO)
        # Keep run records out of the system log
        logger.propagate = False

        handler = RotatingFileHandler(log_path, maxBytes=1024 * 1024 * 5, backupCount=5)
        formatter = logging.Formatter('%(asctime)s - %(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger


def log_invocation(command: str, params: dict):
    """
    Logs a command invocation (flags and paths only) to the main system log.
    """
    try:
        system_logger = logging.getLogger()

        log_entry = {
            "event_type": "CliInvocation",
            "command": command,
            "params": {key: value for key, value in params.items() if value is not None},
        }
        system_logger.info(json.dumps(log_entry, default=str))
    except Exception as e:
        logging.getLogger("system").error(f"Failed to write invocation log: {e}")


def log_run(operation_name, run_details, result_summary, exit_code, command, logs_directory='logs'):
    """
    Logs one run and its outcome to the command's own log file.
    """
    if not command:
        logging.getLogger("system").error("log_run called without a command.")
        return

    try:
        logger = get_run_logger(command, logs_directory)

        log_entry = {
            "operation": operation_name,
            "exit_code": exit_code,
            "request": run_details,
            "result": result_summary
        }
        logger.info(json.dumps(log_entry, indent=2, default=str))
    except Exception as e:
        # Log failure to the general system logger
        logging.getLogger("system").error(f"Failed to write run log for '{command}': {e}")

# --- END OF FILE utils/logger.py ---
