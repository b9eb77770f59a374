from .env_files import (
    VALID_ENVIRONMENTS,
    EnvironmentName,
    current_environment,
    load_dotenv_for_current_env,
)
from .log_setup import configure_logging
from .settings import DEFAULT_SEED, default_seed, default_workers, parse_seed

__all__ = [
    "DEFAULT_SEED",
    "EnvironmentName",
    "VALID_ENVIRONMENTS",
    "configure_logging",
    "current_environment",
    "default_seed",
    "default_workers",
    "load_dotenv_for_current_env",
    "parse_seed",
]
