from .cli import main
from .export import extensions_frame, hasse_dot, quiver_dot, render, report_frame
from .run_config import COMMANDS, SUITES, RunConfig
from .suites import SUITE_FUNCTIONS, SuiteContext, run_suite

__all__ = [
    "COMMANDS",
    "SUITES",
    "SUITE_FUNCTIONS",
    "RunConfig",
    "SuiteContext",
    "extensions_frame",
    "hasse_dot",
    "main",
    "quiver_dot",
    "render",
    "report_frame",
    "run_suite",
]
