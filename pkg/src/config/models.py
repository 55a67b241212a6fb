"""Pydantic configuration for the computation engine.

Usage:
    config = EngineConfig.from_env()
    config = config.model_copy(update={"max_vertices": 20})
"""

import logging
import os
from pathlib import Path
from typing import Any

import dotenv
import yaml
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = Path(__file__).parent / "settings.yaml"

ENV_OVERRIDES = {
    "THETA_GALLAI_MAX_N": "max_vertices",
    "THETA_GALLAI_ORACLE_MAX_N": "oracle_max_vertices",
}


class EngineConfig(BaseModel):
    """Caps and sampling sizes shared by the library, harness and CLI.

    Attributes:
        max_vertices: Largest accepted graph order
        oracle_max_vertices: Cap for the brute-force matching polynomial
        bruteforce_max_vertices: Cap for all-subset extreme/Tutte enumeration
        subset_certificate_limit: Matchings up to this size get every
            sub-matching certified; larger ones are sampled
        random_certificate_samples: Sub-matchings sampled beyond the limit
        path_enumeration_limit: Paths enumerated per vertex pair at most
        cache_max_entries: Matching polynomial cache size before clearing
        sample_theta: Rational non-root sample for premise-free properties
        explore_depth: Number of iterated D-graph steps
        seed: Seed for certificate sampling
    """

    max_vertices: int = Field(default=64, ge=1, le=4096)
    oracle_max_vertices: int = Field(default=12, ge=1, le=24)
    bruteforce_max_vertices: int = Field(default=10, ge=1, le=16)
    subset_certificate_limit: int = Field(default=12, ge=0, le=20)
    random_certificate_samples: int = Field(default=256, ge=1)
    path_enumeration_limit: int = Field(default=200_000, ge=1)
    cache_max_entries: int = Field(default=1_000_000, ge=16)
    sample_theta: str = "3/1"
    explore_depth: int = Field(default=3, ge=1, le=16)
    seed: int = 0

    @classmethod
    def from_yaml(cls, path: Path = DEFAULT_SETTINGS_PATH) -> "EngineConfig":
        """Load settings from a YAML file; a missing file means defaults.

        Sections are flattened, so ``limits.max_vertices`` sets
        ``max_vertices``.

        Raises:
            ValueError: If the file is not valid YAML or not a mapping
        """
        if not path.exists():
            logger.debug(f"No settings file at {path}, using defaults")
            return cls()
        try:
            with path.open() as f:
                raw = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            msg = f"Failed to parse settings file {path}: {e}"
            raise ValueError(msg) from e
        if not isinstance(raw, dict):
            msg = f"Settings file {path} must contain a mapping"
            raise ValueError(msg)

        values: dict[str, Any] = {}
        for key, value in raw.items():
            if isinstance(value, dict):
                values.update(value)
            else:
                values[key] = value
        return cls(**values)

    @classmethod
    def from_env(
        cls,
        env_path: Path = Path(".env"),
        settings_path: Path = DEFAULT_SETTINGS_PATH,
    ) -> "EngineConfig":
        """Load YAML settings, then apply ``.env`` and process overrides.

        Process environment variables win over the ``.env`` file.

        Args:
            env_path: Path to .env file (default: .env in current directory)
            settings_path: YAML settings file

        Raises:
            ValueError: If an override is not an integer
        """
        config = cls.from_yaml(settings_path)
        env_values = dotenv.dotenv_values(str(env_path))
        updates: dict[str, int] = {}
        for variable, field_name in ENV_OVERRIDES.items():
            raw = os.environ.get(variable) or env_values.get(variable)
            if not raw:
                continue
            try:
                updates[field_name] = int(raw)
            except ValueError as e:
                msg = f"{variable} must be an integer, got {raw!r}"
                raise ValueError(msg) from e
        if not updates:
            return config
        logger.debug(f"Environment overrides: {updates}")
        return cls(**(config.model_dump() | updates))
