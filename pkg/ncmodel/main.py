"""
ncmodel - Command Line Entry Point

``run(argv)`` returns the process exit code: 0 on success (verdicts live in
the payload), 1 on bad input, 2 on a broken internal invariant.
"""

import logging
import sys
from typing import Sequence

import click

from ncmodel.cli import cli
from ncmodel.core.exceptions import NcModelError


logger = logging.getLogger(__name__)


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch one command line and map failures to exit codes."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="ncmodel", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted.", err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return 1
    except NcModelError as e:
        logger.debug(f"{type(e).__name__}: {e.detail}")
        click.echo(f"Error: {e.detail}", err=True)
        return e.exit_code
    # --help and --version come back as their exit code
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
