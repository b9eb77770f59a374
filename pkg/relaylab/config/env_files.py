"""Environment selection and ``.env.{ENV}`` loading.

``ENV`` names the deployment and picks which dotenv file is read. Importing
this module loads nothing; the HTTP app bootstrap and the ``relaylab`` CLI
call ``load_dotenv_for_current_env`` before any ``RELAYLAB_*`` setting is read.
"""

import logging
import os
from pathlib import Path
from typing import Literal, cast, get_args

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

EnvironmentName = Literal["dev", "staging", "prod"]
VALID_ENVIRONMENTS: tuple[str, ...] = get_args(EnvironmentName)


def current_environment() -> EnvironmentName:
    """The validated value of ``ENV``, ``dev`` when unset."""
    env = os.getenv("ENV", "dev")
    if env not in VALID_ENVIRONMENTS:
        raise ValueError(
            f"Invalid ENV value: {env}. Must be one of {VALID_ENVIRONMENTS}."
        )
    return cast(EnvironmentName, env)


def load_dotenv_for_current_env() -> EnvironmentName:
    """Load ``.env.{ENV}`` from the working directory, if present.

    Returns the environment name. Process env vars win over the file.
    """
    env = current_environment()
    path = Path(f".env.{env}")
    if load_dotenv(path):
        logger.debug("loaded settings from %s", path)
    return env
