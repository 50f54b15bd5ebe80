#!/usr/bin/env python3
"""
Configuration Management
Loads and validates analyzer configuration from config.yaml
"""

import yaml
from pathlib import Path
from typing import Optional
from dataclasses import dataclass, field, replace

from .logging_config import get_logger
from .exceptions import ConfigurationError
from .constants import (
    DEFAULT_SEED, DEFAULT_STATE_CAP, DEFAULT_EXTENSION_CAP_FACTOR,
    DEFAULT_FIELD_SIZE_CAP, DEFAULT_BRUTE_FORCE_CAP, FORMAT_TEXT, FORMAT_JSON
)

logger = get_logger(__name__)


@dataclass
class AnalysisConfig:
    """Caps and seed for the exact analyses"""
    seed: int = DEFAULT_SEED
    cap_states: int = DEFAULT_STATE_CAP
    cap_extension: int = DEFAULT_EXTENSION_CAP_FACTOR
    field_size_cap: int = DEFAULT_FIELD_SIZE_CAP
    brute_force_cap: int = DEFAULT_BRUTE_FORCE_CAP
    cross_check: bool = True


@dataclass
class LoggingConfig:
    """Logging configuration"""
    level: str = "WARNING"
    file: Optional[str] = None
    console: bool = True
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    date_format: str = "%Y-%m-%d %H:%M:%S"


@dataclass
class OutputConfig:
    """Report output configuration"""
    format: str = FORMAT_TEXT
    indent: int = 2


@dataclass
class Config:
    """Main application configuration"""
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def from_file(cls, config_path: str = "config.yaml") -> 'Config':
        """
        Load configuration from YAML file.

        Args:
            config_path: Path to config.yaml file

        Returns:
            Config instance with loaded settings

        Raises:
            ConfigurationError: If config file is invalid
        """
        config_file = Path(config_path)

        if not config_file.exists():
            logger.warning(f"Config file not found: {config_path}, using defaults")
            return cls.default()

        logger.info(f"Loading configuration from: {config_path}")

        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in config file: {e}") from e

        if not data:
            logger.warning(f"Empty config file: {config_path}, using defaults")
            return cls.default()

        try:
            return cls(
                analysis=AnalysisConfig(**data.get('analysis', {})),
                logging=LoggingConfig(**data.get('logging', {})),
                output=OutputConfig(**data.get('output', {})),
            )
        except TypeError as e:
            raise ConfigurationError(f"Unknown configuration key: {e}") from e

    @classmethod
    def default(cls) -> 'Config':
        """
        Create configuration with default values.

        Returns:
            Config instance with all default settings
        """
        return cls()

    def validate(self):
        """
        Validate configuration values.

        Raises:
            ConfigurationError: If configuration is invalid
        """
        if self.analysis.cap_states < 1:
            raise ConfigurationError("State cap must be at least 1")

        if self.analysis.cap_extension < 1:
            raise ConfigurationError("Extension cap factor must be at least 1")

        if self.analysis.field_size_cap < 2:
            raise ConfigurationError("Field size cap must be at least 2")

        if self.analysis.brute_force_cap < 0:
            raise ConfigurationError("Brute-force cap must not be negative")

        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        if self.logging.level.upper() not in valid_levels:
            raise ConfigurationError(f"Invalid log level: {self.logging.level}")

        if self.output.format not in (FORMAT_TEXT, FORMAT_JSON):
            raise ConfigurationError(f"Invalid output format: {self.output.format}")

        logger.debug("Configuration validated successfully")


@dataclass(frozen=True)
class RunConfig:
    """Settings for a single command invocation (config file merged with CLI flags)"""
    command: str = "analyze"
    input_path: Optional[str] = None
    output_format: str = FORMAT_TEXT
    seed: int = DEFAULT_SEED
    cap_states: int = DEFAULT_STATE_CAP
    cap_extension: int = DEFAULT_EXTENSION_CAP_FACTOR
    field_size_cap: int = DEFAULT_FIELD_SIZE_CAP
    brute_force_cap: int = DEFAULT_BRUTE_FORCE_CAP
    cross_check: bool = True

    @classmethod
    def from_config(cls, config: Config, **overrides) -> 'RunConfig':
        """
        Build run settings from the file configuration and explicit overrides.

        Args:
            config: Loaded configuration
            **overrides: Values from the command line; None entries are ignored

        Returns:
            RunConfig instance
        """
        base = cls(
            output_format=config.output.format,
            seed=config.analysis.seed,
            cap_states=config.analysis.cap_states,
            cap_extension=config.analysis.cap_extension,
            field_size_cap=config.analysis.field_size_cap,
            brute_force_cap=config.analysis.brute_force_cap,
            cross_check=config.analysis.cross_check,
        )
        return replace(base, **{k: v for k, v in overrides.items() if v is not None})


_config: Optional[Config] = None


def get_config(config_path: str = "config.yaml") -> Config:
    """
    Get the global configuration instance.

    Args:
        config_path: Path to config file (only used on first call)

    Returns:
        Config instance
    """
    global _config
    if _config is None:
        try:
            _config = Config.from_file(config_path)
            _config.validate()
        except ConfigurationError as e:
            logger.error(f"Failed to load config, using defaults: {e}")
            _config = Config.default()
    return _config


def reload_config(config_path: str = "config.yaml") -> Config:
    """
    Reload configuration from file.

    Args:
        config_path: Path to config file
    """
    global _config
    _config = None
    return get_config(config_path)
