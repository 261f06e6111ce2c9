"""
ncmodel - Core Module

Configuration, exceptions and exact scalar helpers.
"""

from ncmodel.core.config import get_settings, settings
from ncmodel.core.exceptions import InputError, InvariantViolation, NcModelError

__all__ = ["settings", "get_settings", "NcModelError", "InputError", "InvariantViolation"]
