"""
Configuration management for kirbycert.
"""

import copy
import json
from pathlib import Path
from typing import Any, Dict, Optional

from .log import get_logger

log = get_logger(__name__)

DEFAULTS: Dict[str, Any] = {
    "output_format": "json",
    "log_level": "WARNING",
    "workers": 1,
    "mirror_insensitive": False,
    "sweep": {"n_max": 8, "k_max": 5},
}

OUTPUT_FORMATS = ("json", "table")


class Config:
    """Manages user configuration for kirbycert."""

    def __init__(self, config_dir: Optional[Path] = None):
        self.config_dir = Path(config_dir) if config_dir else Path.home() / ".config" / "kirbycert"
        self.config_file = self.config_dir / "config.json"
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file or create default."""
        if not self.config_file.exists():
            return self._create_default_config()
        try:
            with open(self.config_file, "r") as f:
                loaded = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            log.warning("Error loading config %s: %s", self.config_file, e)
            return copy.deepcopy(DEFAULTS)
        if not isinstance(loaded, dict):
            log.warning("Ignoring config %s: not a JSON object", self.config_file)
            return copy.deepcopy(DEFAULTS)
        config = copy.deepcopy(DEFAULTS)
        config.update(loaded)
        return config

    def _create_default_config(self) -> Dict[str, Any]:
        config = copy.deepcopy(DEFAULTS)
        try:
            self.save(config)
        except OSError as e:
            # read-only home: run on defaults
            log.debug("Could not write default config: %s", e)
        return config

    def get(self, key: str, default: Any = None) -> Any:
        return self.config.get(key, default)

    def set(self, key: str, value: Any):
        if key not in DEFAULTS:
            raise KeyError(f"unknown setting {key!r}")
        self.config[key] = value
        self.save()

    def save(self, config: Optional[Dict[str, Any]] = None):
        if config is not None:
            self.config = config
        self.config_dir.mkdir(parents=True, exist_ok=True)
        with open(self.config_file, "w") as f:
            json.dump(self.config, f, indent=2)

    @property
    def output_format(self) -> str:
        value = self.get("output_format", "json")
        return value if value in OUTPUT_FORMATS else "json"

    @property
    def workers(self) -> int:
        value = self.get("workers", 1)
        return value if isinstance(value, int) and value > 0 else 1

    @property
    def sweep_bounds(self):
        sweep = self.get("sweep") or {}
        return int(sweep.get("n_max", 8)), int(sweep.get("k_max", 5))

    @staticmethod
    def parse_value(key: str, raw: str) -> Any:
        """Convert a command-line string to the type of the default."""
        if key not in DEFAULTS:
            raise KeyError(f"unknown setting {key!r}")
        default = DEFAULTS[key]
        if isinstance(default, bool):
            lowered = raw.strip().lower()
            if lowered not in ("true", "false", "yes", "no", "1", "0"):
                raise ValueError(f"{key} expects true or false")
            return lowered in ("true", "yes", "1")
        if isinstance(default, int):
            return int(raw)
        if isinstance(default, dict):
            value = json.loads(raw)
            if not isinstance(value, dict):
                raise ValueError(f"{key} expects a JSON object")
            return value
        if key == "output_format" and raw not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {', '.join(OUTPUT_FORMATS)}")
        return raw
