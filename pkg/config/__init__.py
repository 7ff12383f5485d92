"""Configuration module for quatorder."""

from .settings import DEFAULTS, get_setting, get_cache_dir, get_available_settings

__all__ = ['DEFAULTS', 'get_setting', 'get_cache_dir', 'get_available_settings']
