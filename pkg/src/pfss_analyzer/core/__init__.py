#!/usr/bin/env python3
"""
Core Infrastructure
Configuration, logging, constants, and exception handling.
"""

from .config import get_config, reload_config, Config, RunConfig
from .constants import NOT_ACHIEVABLE
from .exceptions import PfssError, ConfigurationError, InputError, ParseError
from .logging_config import get_logger, setup_logging

__all__ = [
    'get_config',
    'reload_config',
    'Config',
    'RunConfig',
    'NOT_ACHIEVABLE',
    'PfssError',
    'ConfigurationError',
    'InputError',
    'ParseError',
    'get_logger',
    'setup_logging',
]
