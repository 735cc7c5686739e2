"""
Pipeline settings and their JSON configuration file.
"""

import json
import logging
from dataclasses import dataclass, field, fields, replace
from typing import Any, Dict, Optional, Tuple

from ..core import ImageKitError

logger = logging.getLogger(__name__)


class ConfigError(ImageKitError, ValueError):
    """The configuration file is unreadable, not JSON, or has unknown keys."""


@dataclass(frozen=True)
class StitchSettings:
    crop: Optional[Tuple[int, int, int, int]] = None
    scale: float = 0.25
    keypoints: int = 1000
    fast_threshold: float = 0.05
    min_samples: int = 4
    residual_threshold: float = 2.0
    max_trials: int = 100
    seed: int = 0
    float_clip: bool = True


@dataclass(frozen=True)
class CoinsSettings:
    block_size: int = 95
    offset: float = -15.0
    min_distance: int = 20
    sigma: float = 3.0
    low_threshold: float = 10.0
    high_threshold: float = 80.0


@dataclass(frozen=True)
class Settings:
    stitch: StitchSettings = field(default_factory=StitchSettings)
    coins: CoinsSettings = field(default_factory=CoinsSettings)


def _section(cls, values: Any, name: str):
    if not isinstance(values, dict):
        raise ConfigError(f"section '{name}' must be an object")
    known = {f.name for f in fields(cls)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise ConfigError(f"unknown key(s) in section '{name}': {', '.join(unknown)}")
    if values.get("crop") is not None:
        crop = values["crop"]
        if not isinstance(crop, list) or len(crop) != 4:
            raise ConfigError("stitch.crop must be a list [r0, r1, c0, c1]")
        values = dict(values, crop=tuple(int(v) for v in crop))
    return cls(**values)


def load_settings(path: Optional[str] = None) -> Settings:
    """Read settings from a JSON file shaped {"stitch": {...}, "coins": {...}}.

    Missing sections and keys keep their defaults; unknown ones are rejected.
    """
    if path is None:
        return Settings()
    try:
        with open(path, "r") as f:
            raw = json.load(f)
    except OSError as e:
        raise ConfigError(f"cannot read configuration file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON in configuration file {path}: {e}") from e

    if not isinstance(raw, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = sorted(set(raw) - {"stitch", "coins"})
    if unknown:
        raise ConfigError(f"unknown configuration section(s): {', '.join(unknown)}")
    settings = Settings(
        stitch=_section(StitchSettings, raw.get("stitch", {}), "stitch"),
        coins=_section(CoinsSettings, raw.get("coins", {}), "coins"),
    )
    logger.debug("loaded settings from %s: %s", path, settings)
    return settings


def override(settings, values: Dict[str, Any]):
    """Copy of ``settings`` with every non-None entry of ``values`` applied."""
    known = {f.name for f in fields(settings)}
    return replace(settings, **{k: v for k, v in values.items() if k in known and v is not None})
