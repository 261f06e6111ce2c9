"""
ncmodel - CLI Module

The click command group.
"""

from ncmodel.cli.commands import cli

__all__ = ["cli"]
