"""
High-level workflow functions for common calculus operations.
"""

from typing import List, Optional

from .engine import CalculusConfig, CalculusEngine, CommandResult
from .errors import MathematicalFailure
from .validation import ALL, SuiteReport, SuiteRunner
from .workspace import load_workspace


def run_workspace_checks(path: str, config: Optional[CalculusConfig] = None) -> List[CommandResult]:
    """
    Run every check declared in a workspace.

    Args:
        path: Path to the workspace document
        config: Optional calculus configuration

    Returns:
        One CommandResult per check; refuted preconditions become failed results
    """
    engine = CalculusEngine(config)
    workspace = load_workspace(path, grid=engine.grid)
    results = []
    for check in workspace.checks:
        args = {k: v for k, v in check.items() if k not in ("command", "expect", "name")}
        try:
            results.append(engine.execute(workspace, check["command"], **args))
        except MathematicalFailure as e:
            results.append(CommandResult(check["command"], False, str(e)))
    return results


def verify_suites(suite: str = ALL, trials: Optional[int] = None, workspaces: Optional[List[str]] = None,
                  config: Optional[CalculusConfig] = None) -> SuiteReport:
    """
    Run property suites.

    Args:
        suite: Suite name or "all"
        trials: Random instances per property; the configured default when None
        workspaces: Workspace documents for the workspace suite

    Returns:
        SuiteReport with the pass/fail matrix
    """
    return SuiteRunner(config).run(suite, trials=trials, workspaces=workspaces or [])
