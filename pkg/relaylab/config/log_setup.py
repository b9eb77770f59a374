"""Logging setup shared by the HTTP app and the CLI."""

import logging
import os
import sys

LOG_FORMAT = (
    "%(asctime)s - %(name)s - %(levelname)s - %(message)s - %(filename)s:%(lineno)d"
)
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def configure_logging(stdout_for_info: bool = True) -> None:
    """Install the stdout/stderr handler split.

    INFO/DEBUG go to stdout and WARNING+ to stderr, so routine logs are not
    tagged as errors by log collectors. The CLI passes ``stdout_for_info=False``
    because stdout carries its machine-readable output; everything then goes
    to stderr.

    ``LOG_LEVEL`` sets the level of the ``relaylab`` logger namespace.
    """
    if stdout_for_info:
        stdout_handler = logging.StreamHandler(sys.stdout)
        stdout_handler.addFilter(lambda record: record.levelno < logging.WARNING)
        stderr_handler = logging.StreamHandler(sys.stderr)
        stderr_handler.setLevel(logging.WARNING)
        handlers: list[logging.Handler] = [stdout_handler, stderr_handler]
    else:
        handlers = [logging.StreamHandler(sys.stderr)]
    logging.basicConfig(
        level=logging.WARNING,
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT,
        handlers=handlers,
        force=True,
    )
    if "LOG_LEVEL" in os.environ:
        log_level = logging.getLevelNamesMapping().get(os.environ["LOG_LEVEL"].upper())
        if log_level is None:
            raise ValueError(f"Invalid log level: {os.environ['LOG_LEVEL']}")
        logging.getLogger("relaylab").setLevel(log_level)
