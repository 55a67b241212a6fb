"""Engine configuration: caps, sampling sizes and the non-root sample."""

from .models import DEFAULT_SETTINGS_PATH, EngineConfig

__all__ = ["DEFAULT_SETTINGS_PATH", "EngineConfig"]
