"""
YAML configuration for the command line.
"""

import logging
from pathlib import Path
from typing import Optional

import yaml

from macdonald_lr.errors import ParseError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = Path("config.yaml")


def get_config(config_path: Path) -> dict:
    if not config_path.exists():
        return {}
    with open(config_path, "r") as f:
        return yaml.safe_load(f) or {}


def load_config(explicit: Optional[Path] = None) -> dict:
    """The --config file when given, else config.yaml in the working
    directory, else an empty mapping."""
    if explicit is not None:
        if not explicit.exists():
            logger.warning(
                "Config file %s not found, using defaults", explicit
            )
        return get_config(explicit)
    return get_config(DEFAULT_CONFIG)


def get_section(config: dict, key: str) -> dict:
    section = config.get(key) or {}
    if not isinstance(section, dict):
        raise ParseError(f"config section {key!r} must be a mapping")
    return section
