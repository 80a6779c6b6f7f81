"""
Configuration: built-in defaults, an optional key=value file, then flags.

The file path comes from --config or the MNSD_CONFIG environment variable.
DATABASE_URL overrides the report store location.
"""
import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Dict, Mapping, Optional

from utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "MNSD_CONFIG"

_CHOICES = {
    'filters': ("basic", "full"),
    'f2_mode': ("legacy", "strict"),
    'format': ("table", "json", "csv"),
    'log_level': ("DEBUG", "INFO", "WARNING", "ERROR"),
}


@dataclass(frozen=True)
class Settings:
    filters: str = "full"
    f2_mode: str = "legacy"
    format: str = "table"
    timing: bool = False
    workers: int = 1
    max: int = 2025
    log_level: str = "WARNING"
    database_url: str = "sqlite:///mnsd_reports.db"


def _coerce(key: str, raw: str):
    kind = {f.name: f.type for f in fields(Settings)}[key]
    value = raw.strip()
    if kind in (bool, "bool"):
        lowered = value.lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ConfigurationError(f"'{key}' expects a boolean, got '{raw}'")
    if kind in (int, "int"):
        try:
            number = int(value)
        except ValueError:
            raise ConfigurationError(f"'{key}' expects an integer, got '{raw}'")
        if number < 1:
            raise ConfigurationError(f"'{key}' must be positive, got {number}")
        return number
    if key == 'log_level':
        value = value.upper()
    if key in _CHOICES and value not in _CHOICES[key]:
        raise ConfigurationError(f"'{key}' must be one of {', '.join(_CHOICES[key])}, got '{raw}'")
    return value


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, object]:
    """Parse key=value lines; '#' starts a comment."""
    known = {f.name for f in fields(Settings)}
    values: Dict[str, object] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{source}:{line_no}: expected key=value, got '{line}'")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ConfigurationError(f"{source}:{line_no}: unknown key '{key}'")
        values[key] = _coerce(key, raw)
    return values


def load_settings(path: Optional[str] = None, env: Optional[Mapping[str, str]] = None,
                  overrides: Optional[Mapping[str, object]] = None) -> Settings:
    """
    Resolve settings with precedence built-ins < file < overrides.

    Args:
        path: Config file path; falls back to $MNSD_CONFIG
        env: Environment mapping (os.environ by default)
        overrides: Flag values; None entries are ignored

    Returns:
        Settings
    """
    env = os.environ if env is None else env
    settings = Settings()

    if env.get("DATABASE_URL"):
        settings = replace(settings, database_url=env["DATABASE_URL"])

    path = path or env.get(CONFIG_ENV_VAR)
    if path:
        try:
            with open(path, "r") as handle:
                text = handle.read()
        except OSError as e:
            raise ConfigurationError(f"Cannot read config file {path}: {str(e)}")
        file_values = parse_config_text(text, path)
        logger.debug("Loaded %d settings from %s", len(file_values), path)
        settings = replace(settings, **file_values)

    if overrides:
        settings = replace(settings, **{k: v for k, v in overrides.items() if v is not None})
    return settings
