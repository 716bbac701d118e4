"""
Configuration management for the lshape command line
"""
import os
import logging
import math
from typing import Iterable, Optional
from dotenv import load_dotenv

from casestudy import DEFAULT_NEAR_OPTIMAL_THRESHOLD
from oracle import Tolerances

OUTPUT_FORMATS = ("text", "json", "csv")


class ConfigError(ValueError):
    """Unknown configuration key or unusable value"""


def _env_flag(name: str) -> bool:
    """True when the variable is set to anything but an explicit 'off' value"""
    value = os.getenv(name, "").strip().lower()
    return bool(value) and value not in ('0', 'false', 'no', 'off')


class CliConfig:
    """Command-line configuration"""

    KEYS = ("output_format", "output_path", "near_optimal_threshold", "tolerances")

    def __init__(self, **overrides):
        """
        Load defaults from the environment, then apply overrides

        Args:
            **overrides: Any of KEYS

        Raises:
            ConfigError: On unknown keys
        """
        # Load .env file if it exists
        load_dotenv()

        self.logger = logging.getLogger(__name__)

        self.output_format: str = os.getenv("LSHAPE_FORMAT", "text").strip().lower() or "text"
        self.output_path: Optional[str] = None
        self.near_optimal_threshold: float = DEFAULT_NEAR_OPTIMAL_THRESHOLD
        self.tolerances: Tolerances = Tolerances()

        # randomized checks must be reproducible on CI
        self.require_seed: bool = _env_flag("CI")

        self.update(**overrides)

    def update(self, **overrides) -> "CliConfig":
        """
        Replace fields; None values keep the current setting

        Raises:
            ConfigError: On unknown keys
        """
        unknown = sorted(set(overrides) - set(self.KEYS))
        if unknown:
            raise ConfigError(f"unknown configuration key(s): {', '.join(unknown)}; known: {', '.join(self.KEYS)}")
        for key, value in overrides.items():
            if value is not None:
                setattr(self, key, value)
        return self

    def apply_tolerance_overrides(self, pairs: Iterable[str]) -> "CliConfig":
        """
        Apply NAME=VALUE tolerance overrides such as 'objective=1e-7'

        Raises:
            ConfigError: On malformed pairs, unknown names or non-positive values
        """
        overrides = {}
        for pair in pairs:
            name, sep, text = pair.partition("=")
            if not sep or not name.strip():
                raise ConfigError(f"tolerance override must look like NAME=VALUE, got {pair!r}")
            try:
                overrides[name.strip()] = float(text)
            except ValueError:
                raise ConfigError(f"tolerance {name.strip()} needs a number, got {text!r}") from None
        if overrides:
            try:
                self.tolerances = self.tolerances.with_overrides(**overrides)
            except ValueError as e:
                raise ConfigError(str(e)) from e
        return self

    def validate(self) -> bool:
        """
        Validate all settings

        Returns:
            True if every setting is usable
        """
        valid = True
        if self.output_format not in OUTPUT_FORMATS:
            self.logger.error(
                f"❌ Output format {self.output_format!r} is not one of {', '.join(OUTPUT_FORMATS)} (check LSHAPE_FORMAT)"
            )
            valid = False

        threshold = self.near_optimal_threshold
        if not isinstance(threshold, (int, float)) or not math.isfinite(threshold) or threshold < 0:
            self.logger.error(f"❌ Near-optimal threshold must be a non-negative number, got {threshold!r}")
            valid = False

        if not isinstance(self.tolerances, Tolerances):
            self.logger.error(f"❌ Tolerances must be a Tolerances instance, got {type(self.tolerances).__name__}")
            valid = False

        if self.output_path is not None and os.path.isdir(self.output_path):
            self.logger.error(f"❌ Output path {self.output_path} is a directory")
            valid = False

        return valid

    def __repr__(self) -> str:
        """String representation of config"""
        return (
            f"CliConfig(\n"
            f"  output_format={self.output_format!r}\n"
            f"  output_path={self.output_path!r}\n"
            f"  near_optimal_threshold={self.near_optimal_threshold}\n"
            f"  tolerances={self.tolerances}\n"
            f"  require_seed={self.require_seed}\n"
            f")"
        )
