"""Configuration loading and settings."""

from pdmchannel.config.settings import Settings, configure_logging, get_settings

__all__ = ["get_settings", "Settings", "configure_logging"]
