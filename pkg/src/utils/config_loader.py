"""
Config Loader - loads lift_config.yaml
"""
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from loguru import logger


class LiftConfig:
    """Experiment defaults for the verification suites"""

    def __init__(self, config_path: Optional[Path] = None):
        if config_path is None:
            from src.config import get_settings
            config_path = get_settings().GSP4_CONFIG_PATH
        self.config_path = Path(config_path)
        self._config: Dict[str, Any] = {}
        self.load()

    def load(self):
        """Load the YAML file, falling back to defaults"""
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                loaded = yaml.safe_load(f)
            if not isinstance(loaded, dict):
                raise ValueError("top level must be a mapping")
            self._config = loaded
            logger.debug(f"Config loaded: {self.config_path}")
        except FileNotFoundError:
            logger.warning(f"Config not found: {self.config_path}, using defaults")
            self._config = self._get_default_config()
        except Exception as e:
            logger.error(f"Failed to load config {self.config_path}: {e}")
            self._config = self._get_default_config()

    def _get_default_config(self) -> Dict[str, Any]:
        return {
            "lie_check": {
                "trials": 1000,
                "seed": 42,
                "max_level": 3,
                "eigen_samples": 100,
                "bracket_samples": 50,
            },
            "report": {"lie_trials": 25},
            "bound": {"strict": True},
        }

    @property
    def lie_trials(self) -> int:
        return int(self._config.get("lie_check", {}).get("trials", 1000))

    @property
    def lie_seed(self) -> int:
        return int(self._config.get("lie_check", {}).get("seed", 42))

    @property
    def max_level(self) -> int:
        return int(self._config.get("lie_check", {}).get("max_level", 3))

    @property
    def eigen_samples(self) -> int:
        return int(self._config.get("lie_check", {}).get("eigen_samples", 100))

    @property
    def bracket_samples(self) -> int:
        return int(self._config.get("lie_check", {}).get("bracket_samples", 50))

    @property
    def report_lie_trials(self) -> int:
        return int(self._config.get("report", {}).get("lie_trials", 25))

    @property
    def strict_bound(self) -> bool:
        return bool(self._config.get("bound", {}).get("strict", True))

    def get(self, key: str, default=None):
        """Dotted-path lookup, e.g. get("lie_check.seed")"""
        value: Any = self._config
        for k in key.split("."):
            if isinstance(value, dict):
                value = value.get(k, default)
            else:
                return default
        return value
