"""Entry point: dispatches subcommands with fire and maps errors to exit codes"""
import logging
import sys
from typing import List, Optional

import fire
from fire.core import FireExit
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from core.exceptions import (
    DimensionMismatchError,
    GraphSpecError,
    InvalidInstanceError,
    ProblemFormatError,
    RetryBudgetExhaustedError,
)
from utils.settings import get_settings
from .commands import PosiflowCommands
from .exit_codes import ExitCode, UsageError

logger = logging.getLogger("posiflow.cli")


def configure_logging(level: str) -> None:
    """Send every posiflow logger to stderr through rich"""
    handler = RichHandler(console=Console(stderr=True), show_path=False, show_time=False)
    root = logging.getLogger("posiflow")
    root.handlers = [handler]
    root.setLevel(level.upper())
    root.propagate = False


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand

    Args:
        argv: Arguments without the program name; sys.argv is used when omitted

    Returns:
        Process exit code
    """
    settings = get_settings()
    configure_logging(settings.log_level)
    commands = PosiflowCommands(settings)
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        fire.Fire(commands, command=argv, name="posiflow")
    except FireExit as e:
        return ExitCode.SUCCESS if not e.code else ExitCode.USAGE
    except (UsageError, ValidationError) as e:
        logger.error("usage: %s", e)
        return ExitCode.USAGE
    except InvalidInstanceError as e:
        logger.error("%s", e)
        return ExitCode.VALIDATION_FAILED
    except (ProblemFormatError, GraphSpecError, DimensionMismatchError) as e:
        logger.error("data format: %s", e)
        return ExitCode.DATA_FORMAT
    except FileNotFoundError as e:
        logger.error("%s", e)
        return ExitCode.FILE_NOT_FOUND
    except RetryBudgetExhaustedError as e:
        logger.error("%s", e)
        return ExitCode.DIVERGED
    except ValueError as e:
        logger.error("data format: %s", e)
        return ExitCode.DATA_FORMAT
    return int(commands.exit_code)


def run_console() -> None:
    sys.exit(main())
