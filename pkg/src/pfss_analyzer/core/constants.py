#!/usr/bin/env python3
"""
Constants for the PFSS analyzer
Centralized location for caps, defaults and sentinel values.
"""

# Sentinel rendered when no initial condition achieves a requested period
NOT_ACHIEVABLE = "NOT ACHIEVABLE"

# Randomized subroutines (irreducible search, equal-degree splitting)
DEFAULT_SEED = 0

# Exhaustive enumeration cap (number of states)
DEFAULT_STATE_CAP = 2 ** 24

# Extension degree cap for element roots, as a multiple of the current degree
DEFAULT_EXTENSION_CAP_FACTOR = 64

# Largest field handled by the root search
DEFAULT_FIELD_SIZE_CAP = 2 ** 64

# Candidate matrices tried by the brute-force root search
DEFAULT_BRUTE_FORCE_CAP = 2 ** 16

# Fields up to this size get discrete log/antilog tables
LOG_TABLE_LIMIT = 2 ** 16

# Input schema version
SCHEMA_VERSION = 1

# Root decision outcomes
STATUS_ROOT = "root"
STATUS_NO_ROOT = "no-root"
STATUS_UNDETERMINED = "undetermined"

# Orbit length classifications
CLASS_EXACT = "exact"
CLASS_RESOLVED_BY_ORACLE = "resolved-by-oracle"

# Orbit counting branches
BRANCH_FORMULA = "formula"
BRANCH_EXHAUSTIVE = "exhaustive"

# Generator names used when rendering tower elements, bottom level first
GENERATOR_NAMES = ("a", "b", "c", "d", "e", "f", "g", "h")

# Output formats
FORMAT_TEXT = "text"
FORMAT_JSON = "json"

# Logging settings
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_LOG_FILE = None
DEFAULT_LOG_TO_CONSOLE = True
