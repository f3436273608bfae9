"""
CLI entry point for oa-core tools.
"""

import functools
import json
import logging
import sys
from typing import Any, Dict, Optional

import click

from ..engine import CalculusConfig, CalculusEngine, CommandResult
from ..errors import MathematicalFailure, OACoreError
from ..schemas import WorkspaceSchema
from ..utils import YamlParser
from ..validation import ALL, SUITES, SuiteReport, SuiteRunner
from ..workspace import load_workspace

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2

logger = logging.getLogger(__name__)


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _load_config(config_path: Optional[str], **overrides: Any) -> CalculusConfig:
    config = CalculusConfig.load_from_file(config_path) if config_path else CalculusConfig()
    return config.override(**overrides)


def _render(data: Dict[str, Any], output_format: str) -> str:
    if output_format == "json":
        return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    return YamlParser().dump_string(data).rstrip("\n")


def _compact(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return str(value)


def _emit(result: CommandResult, output_format: str) -> None:
    data = result.to_dict()
    if output_format != "text":
        click.echo(_render(data, output_format))
        return
    status = "✅ PASS" if result.passed else "❌ FAIL"
    click.echo(f"{result.command}: {status}")
    click.echo(f"  {result.summary}")
    for key, value in data["data"].items():
        click.echo(f"  {key:<22} {_compact(value)}")
    if "witness" in data:
        click.echo("  witness:")
        for key, value in data["witness"].items():
            click.echo(f"    {key:<20} {_compact(value)}")


def _failure_result(command: str, error: MathematicalFailure) -> CommandResult:
    witness = error.witness
    if witness is not None and not isinstance(witness, dict):
        witness = {"detail": witness}
    return CommandResult(command=command, passed=False, summary=str(error), witness=witness)


def calculus_options(func):
    """Options shared by every workspace command."""
    options = [
        click.option("--workspace", "-w", "workspace_path", required=True,
                     type=click.Path(exists=True, dir_okay=False), help="Workspace document (YAML)"),
        click.option("--config", "-c", "config_path", type=click.Path(dir_okay=False),
                     help="Configuration file (YAML)"),
        click.option("--format", "-f", "output_format", default="text",
                     type=click.Choice(["text", "yaml", "json"]), help="Output format"),
        click.option("--verbose", "-v", count=True, help="Log progress to stderr (-vv for debug)"),
        click.option("--support-cap", type=int, help="Largest support enumerated exhaustively [20]"),
        click.option("--full-cap", type=int, help="Largest source for full-mode checks [6]"),
        click.option("--partition-cap", type=int, help="Largest source for partition enumeration [6]"),
        click.option("--grid", "grid_size", type=int, help="Number of uniform grid points [201]"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run_command(command: str):
    """Turn a function returning command arguments into a workspace command."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(workspace_path: str, config_path: Optional[str], output_format: str, verbose: int,
                    support_cap: Optional[int], full_cap: Optional[int], partition_cap: Optional[int],
                    grid_size: Optional[int], **kwargs):
            _configure_logging(verbose)
            args = func(**kwargs)
            try:
                config = _load_config(config_path, caps__support_cap=support_cap, caps__full_mode_cap=full_cap,
                                      caps__partition_cap=partition_cap, grid__size=grid_size)
                engine = CalculusEngine(config)
                workspace = load_workspace(workspace_path, grid=engine.grid)
                result = engine.execute(workspace, command, **args)
            except MathematicalFailure as e:
                _emit(_failure_result(command, e), output_format)
                sys.exit(EXIT_FAILURE)
            except (OACoreError, ValueError) as e:
                click.echo(f"Error: {e}", err=True)
                sys.exit(EXIT_INPUT_ERROR)
            _emit(result, output_format)
            sys.exit(EXIT_OK if result.passed else EXIT_FAILURE)

        return wrapper

    return decorator


@click.group()
@click.version_option(version="0.1.0")
def cli():
    """
    oa-core: exact calculus for orthogonally additive operators

    Check atomicity, compute lattice operations and band projections,
    factor atomic operators and extend maps from lateral ideals, on
    finite spaces with exact rational arithmetic.
    """
    pass


@cli.command("check-atomic")
@click.option("--op", required=True, help="Operator name")
@click.option("--hom", required=True, help="Homomorphism name")
@click.option("--mode", default="singleton", type=click.Choice(["singleton", "full"]), help="Check mode")
@calculus_options
@run_command("check-atomic")
def check_atomic(op: str, hom: str, mode: str):
    """Decide whether an operator is atomic subordinate to a homomorphism."""
    return {"op": op, "hom": hom, "mode": mode}


@cli.command()
@click.option("--op", required=True, help="Positive operator name")
@click.option("--hom", required=True, help="Homomorphism name")
@click.option("--verify-partitions", is_flag=True, help="Compare with the minimum over all set partitions")
@calculus_options
@run_command("project")
def project(op: str, hom: str, verify_partitions: bool):
    """Band projection of a positive operator onto the atomic band."""
    return {"op": op, "hom": hom, "verify_partitions": verify_partitions}


@cli.command()
@click.option("--kind", required=True, type=click.Choice(["join", "meet", "pos", "neg", "mod", "abs"]),
              help="Lattice operation")
@click.option("--op", required=True, help="Operator name")
@click.option("--op2", help="Second operator (join, meet)")
@click.option("--at", "at", required=True, help="Element name or inline values, e.g. '[1, 1/2]'")
@click.option("--hom", help="Homomorphism for the pointwise formula (derived when omitted)")
@click.option("--oracle", is_flag=True, help="Also enumerate every decomposition of the element")
@calculus_options
@run_command("lattice")
def lattice(kind: str, op: str, op2: Optional[str], at: str, hom: Optional[str], oracle: bool):
    """Operator lattice operations evaluated at an element."""
    return {"kind": kind, "op": op, "op2": op2, "at": at, "hom": hom, "oracle": oracle}


@cli.command()
@click.option("--op", required=True, help="Atomic operator name")
@click.option("--hom", required=True, help="Homomorphism with a bijective point map")
@calculus_options
@run_command("factor")
def factor(op: str, hom: str):
    """Factor an atomic operator through a shift and a superposition operator."""
    return {"op": op, "hom": hom}


@cli.command()
@click.option("--map", "map_name", required=True, help="Positive operator restricted to the ideal")
@click.option("--ideal", required=True, help="Lateral ideal name")
@click.option("--at", "at", required=True, help="Element name or inline values")
@calculus_options
@run_command("extend")
def extend(map_name: str, ideal: str, at: str):
    """Minimal extension of a positive map from a lateral ideal."""
    return {"map": map_name, "ideal": ideal, "at": at}


@cli.command()
@click.option("--element", required=True, help="Element name or inline values")
@click.option("--space", help="Space for inline values")
@calculus_options
@run_command("fragments")
def fragments(element: str, space: Optional[str]):
    """Enumerate the fragments of an element and verify their Boolean algebra."""
    return {"element": element, "space": space}


@cli.command()
@click.option("--f", "f", required=True, help="First element")
@click.option("--g", "g", required=True, help="Second element")
@click.option("--space", help="Space for inline values")
@click.option("--delta", help="Threshold for the deviation measure")
@click.option("--carrier", multiple=True, help="Point of the carrier for the local metric (repeatable)")
@calculus_options
@run_command("metric")
def metric(f: str, g: str, space: Optional[str], delta: Optional[str], carrier):
    """Metric of convergence in measure between two elements."""
    return {"f": f, "g": g, "space": space, "delta": delta, "carrier": list(carrier) or None}


@cli.command()
@click.option("--op", required=True, help="Operator name")
@click.option("--box", required=True, help="Nonnegative element bounding the search box")
@click.option("--bound", "bound", required=True, help="Bound M that |Tx| must reach")
@click.option("--resolution", type=int, help="Grid steps per unit of the box [1000]")
@calculus_options
@run_command("bound")
def bound(op: str, box: str, bound: str, resolution: Optional[int]):
    """Search an order interval for an element whose image reaches a bound."""
    return {"op": op, "box": box, "bound": bound, "resolution": resolution}


@cli.command()
@click.argument("workspace_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "-f", "output_format", default="text", type=click.Choice(["text", "json"]))
def validate(workspace_path: str, output_format: str):
    """Validate a workspace document against the schema and resolve its references."""
    result = WorkspaceSchema().validate_file(workspace_path)
    errors = list(result.errors)
    if result.is_valid:
        try:
            load_workspace(workspace_path)
        except OACoreError as e:
            errors.extend(getattr(e, "diagnostics", []) or [str(e)])
    if output_format == "json":
        click.echo(json.dumps({"valid": not errors, "errors": errors, "warnings": result.warnings}, indent=2))
    else:
        click.echo(f"{workspace_path}: {'✅ valid' if not errors else '❌ invalid'}")
        for error in errors:
            click.echo(f"❌ {error}")
        for warning in result.warnings:
            click.echo(f"⚠️ {warning}")
    sys.exit(EXIT_OK if not errors else EXIT_INPUT_ERROR)


def _emit_suite_report(report: SuiteReport, output_format: str) -> None:
    data = report.to_dict()
    if output_format != "text":
        click.echo(_render(data, output_format))
        return
    click.echo("Property Suite Report")
    click.echo("=====================")
    for suite, properties in data["suites"].items():
        for name, entry in properties.items():
            mark = "✅" if entry["passed"] else "❌"
            click.echo(f"{mark} {suite:<14} {name:<48} {entry['checked']:>7} checks")
            if not entry["passed"]:
                click.echo(f"   {_compact(entry.get('witness') or entry.get('error'))}")
    click.echo()
    click.echo(f"{data['passed_properties']}/{data['properties']} properties passed, "
               f"{data['total_checks']} checks")


@cli.command("verify-all")
@click.option("--suite", "-s", default=ALL, type=click.Choice(list(SUITES) + [ALL]), help="Suite to run")
@click.option("--workspace", "-w", "workspaces", multiple=True, type=click.Path(exists=True, dir_okay=False),
              help="Workspace whose checks the workspace suite runs (repeatable)")
@click.option("--trials", "-n", type=int, help="Random instances per property")
@click.option("--config", "-c", "config_path", type=click.Path(dir_okay=False), help="Configuration file")
@click.option("--format", "-f", "output_format", default="text", type=click.Choice(["text", "yaml", "json"]))
@click.option("--verbose", "-v", count=True)
def verify_all(suite: str, workspaces, trials: Optional[int], config_path: Optional[str],
               output_format: str, verbose: int):
    """Run the property suites and print a pass/fail matrix."""
    _configure_logging(verbose)
    if suite == "workspace" and not workspaces:
        click.echo("Error: the workspace suite needs at least one --workspace", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    try:
        config = _load_config(config_path)
        report = SuiteRunner(config).run(suite, trials=trials, workspaces=list(workspaces))
    except (OACoreError, ValueError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    _emit_suite_report(report, output_format)
    sys.exit(EXIT_OK if report.passed else EXIT_FAILURE)


if __name__ == "__main__":
    cli()
