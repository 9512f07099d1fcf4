"""
Configuration loading.

Settings come from ``configs/default.yaml`` (or a file given on the command
line), are overridden by the ``ALTDESC_ENUM_BOUND_A`` / ``ALTDESC_ENUM_BOUND_B``
environment variables, and finally by explicit flags.
"""

import logging
import os
from pathlib import Path
from typing import Dict, Mapping, Optional

import yaml
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "configs" / "default.yaml"

ENV_BOUND_A = "ALTDESC_ENUM_BOUND_A"
ENV_BOUND_B = "ALTDESC_ENUM_BOUND_B"


class EnumerationBounds(BaseModel):
    """Largest n for which exhaustive routes may run."""

    type_a: int = Field(default=8, ge=0)
    type_b: int = Field(default=7, ge=0)


class ProfileSettings(BaseModel):
    """Default check ranges of one verification profile."""

    type_a: int = Field(ge=1)
    type_b: int = Field(ge=1)
    series_order: int = Field(ge=1)
    formula: int = Field(ge=1)


class LoggingSettings(BaseModel):
    level: str = "WARNING"
    format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class CacheSettings(BaseModel):
    path: Optional[str] = None


def _default_profiles() -> Dict[str, ProfileSettings]:
    return {
        "quick": ProfileSettings(type_a=6, type_b=5, series_order=8, formula=12),
        "full": ProfileSettings(type_a=8, type_b=7, series_order=12, formula=20),
    }


class Settings(BaseModel):
    """Complete toolkit configuration."""

    enumeration: EnumerationBounds = Field(default_factory=EnumerationBounds)
    chunk_size: int = Field(default=65536, ge=1)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    profiles: Dict[str, ProfileSettings] = Field(default_factory=_default_profiles)
    cache: CacheSettings = Field(default_factory=CacheSettings)

    def profile(self, name: str) -> ProfileSettings:
        try:
            return self.profiles[name]
        except KeyError:
            raise ValueError(f"unknown profile {name!r}; known: {sorted(self.profiles)}")

    def with_bounds(self, type_a: Optional[int] = None, type_b: Optional[int] = None) -> "Settings":
        """Return a copy with the given enumeration bounds replaced; negative bounds are rejected."""
        bounds = EnumerationBounds.model_validate({
            **self.enumeration.model_dump(),
            **{key: value for key, value in (("type_a", type_a), ("type_b", type_b)) if value is not None},
        })
        return self.model_copy(update={"enumeration": bounds})


def _env_bound(env: Mapping[str, str], name: str) -> Optional[int]:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def load_settings(config_path: Optional[str] = None,
                  env: Optional[Mapping[str, str]] = None) -> Settings:
    """
    Load settings from YAML and apply environment overrides.

    Args:
        config_path: YAML file to read; defaults to configs/default.yaml.
        env: environment mapping (defaults to os.environ).

    Returns:
        Settings: the merged configuration.
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    data = {}
    if path.exists():
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        logger.debug(f"Loaded configuration from {path}")
    elif config_path:
        raise FileNotFoundError(f"configuration file not found: {path}")

    settings = Settings.model_validate(data)
    env = os.environ if env is None else env
    return settings.with_bounds(
        type_a=_env_bound(env, ENV_BOUND_A),
        type_b=_env_bound(env, ENV_BOUND_B),
    )


_active: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the process-wide settings, loading the defaults on first use."""
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def configure(settings: Optional[Settings]) -> Optional[Settings]:
    """Install ``settings`` as the active configuration and return the previous one."""
    global _active
    previous = _active
    _active = settings
    return previous
