# -*- coding: utf-8 -*-
"""Package environment variables.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging
import os

from .config import (
    CONFIG_ENVIRONMENT_VARIABLE,
    DEFAULT_LOG_LEVEL,
    LOG_LEVEL_ENVIRONMENT_VARIABLE,
)


# Helper Functions
def _get_config_path():
    """Get the default run-configuration file path from the environment.

    Returns:
        The path found in the environment (str), or None.
    """
    config_path = os.environ.get(CONFIG_ENVIRONMENT_VARIABLE)
    return config_path or None


def _get_log_level():
    """Get the CLI log level name from the environment.

    Unknown level names fall back to the package default rather than failing
    at import time.

    Returns:
        str: An upper-case logging level name.
    """
    level = os.environ.get(LOG_LEVEL_ENVIRONMENT_VARIABLE, DEFAULT_LOG_LEVEL)
    level = level.strip().upper()
    if isinstance(logging.getLevelName(level), int):
        return level
    return DEFAULT_LOG_LEVEL


# Package Environment Variables
FOODSUBS_CONFIG = _get_config_path()

FOODSUBS_LOG_LEVEL = _get_log_level()
