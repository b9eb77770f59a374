"""Load ``.env.{ENV}`` as soon as the app package is imported.

No variable is required; every setting has a default.
"""

from relaylab.config import EnvironmentName, current_environment, load_dotenv_for_current_env

load_dotenv_for_current_env()


def get_current_environment() -> EnvironmentName:
    return current_environment()
