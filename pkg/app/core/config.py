"""
config.py

Single environment loader.

Reads `.env` (python-dotenv) once, then the process environment. Only
runtime knobs live here; experiment parameters come from presets and CLI
flags and are never read from the environment.

    QMEM_WORKERS   default worker processes for sweeps   (int >= 1, default 1)
    QMEM_LOG       structured event logs on/off          (1/0, default 1)
    QMEM_LOG_TZ    IANA zone for log timestamps          (default UTC)
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from zoneinfo import ZoneInfo, ZoneInfoNotFoundError

from dotenv import load_dotenv

from app.core.errors import ConfigError


_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


@dataclass(frozen=True)
class Settings:
    workers: int = 1
    log_enabled: bool = True
    log_tz: str = "UTC"

    @property
    def zone(self) -> ZoneInfo:
        return ZoneInfo(self.log_tz)


def _parse_workers(raw: str | None) -> int:
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError("QMEM_WORKERS", f"expected an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError("QMEM_WORKERS", f"must be >= 1, got {value}")
    return value


def _parse_flag(raw: str | None, default: bool, name: str) -> bool:
    if raw is None or raw.strip() == "":
        return default
    lowered = raw.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ConfigError(name, f"expected one of 1/0/true/false, got {raw!r}")


def _parse_zone(raw: str | None) -> str:
    if raw is None or raw.strip() == "":
        return "UTC"
    try:
        ZoneInfo(raw.strip())
    except (ZoneInfoNotFoundError, ValueError):
        raise ConfigError("QMEM_LOG_TZ", f"unknown time zone {raw!r}") from None
    return raw.strip()


def load_settings(environ: dict[str, str] | None = None) -> Settings:
    """Build Settings from `environ` (defaults to os.environ after loading .env)."""
    if environ is None:
        load_dotenv()
        environ = dict(os.environ)
    return Settings(
        workers=_parse_workers(environ.get("QMEM_WORKERS")),
        log_enabled=_parse_flag(environ.get("QMEM_LOG"), True, "QMEM_LOG"),
        log_tz=_parse_zone(environ.get("QMEM_LOG_TZ")),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings, loaded on first use."""
    return load_settings()
