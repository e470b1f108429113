"""
cli/
----
Command-line front end.

Public API
----------
    from app.cli import cli, parse_args, emit_csv

    cli          click group (sweep, fixed-point-check, single-run)
    parse_args   argv → validated CliConfig, without running anything
    emit_csv     sweep results → CSV file or stdout
"""

from app.cli.commands import CliConfig, build_cli_config, cli, fixed_point_check, parse_args
from app.cli.output import OutputError, emit_csv, render_summary, sweep_frame

__all__ = [
    # Commands
    "cli",
    "parse_args",
    "build_cli_config",
    "fixed_point_check",
    "CliConfig",
    # Output
    "emit_csv",
    "render_summary",
    "sweep_frame",
    "OutputError",
]
