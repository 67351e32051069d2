"""
betti-utilities - configuration/__init__.py

Licensed under the MIT License.
"""
from betti_utils.configuration.settings import BettiSettings, SettingsError, load_settings

__all__ = ["BettiSettings", "SettingsError", "load_settings"]
