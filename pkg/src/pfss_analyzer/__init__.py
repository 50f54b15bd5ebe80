#!/usr/bin/env python3
"""
PFSS Analyzer - Periodic Finite State Systems over finite fields
Exact monodromy, Floquet transforms, orbit structure and periodic shift registers.
"""

__version__ = "1.0.0"
__author__ = "PFSS Analyzer Team"

from .core.config import get_config, Config, RunConfig
from .core.constants import NOT_ACHIEVABLE
from .core.exceptions import (
    PfssError,
    FieldError,
    LinalgError,
    DynamicsError,
    InputError,
    ParseError,
    ConfigurationError
)
from .systems.pfss import Pfss
from .systems.analysis import analyze

__all__ = [
    'get_config',
    'Config',
    'RunConfig',
    'NOT_ACHIEVABLE',
    'PfssError',
    'FieldError',
    'LinalgError',
    'DynamicsError',
    'InputError',
    'ParseError',
    'ConfigurationError',
    'Pfss',
    'analyze',
]
