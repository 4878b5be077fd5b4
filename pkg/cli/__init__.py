"""Command line interface"""

from .exit_codes import ExitCode, UsageError
from .commands import PosiflowCommands
from .main import configure_logging, main, run_console

__all__ = ["ExitCode", "UsageError", "PosiflowCommands", "configure_logging", "main", "run_console"]
