"""
Unit tests for oa_core.cli module.
"""

import json
from pathlib import Path

import pytest
import yaml
from click.testing import CliRunner

from oa_core.cli.main import EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, cli

WORKSPACES = Path(__file__).resolve().parent.parent / "workspaces"

Z4 = str(WORKSPACES / "z4_shift.yaml")
PAIR = str(WORKSPACES / "coordinate_projections.yaml")
SQUARE = str(WORKSPACES / "two_point_square.yaml")
INVERSE = str(WORKSPACES / "inverse_square.yaml")
EXTENSION = str(WORKSPACES / "extension.yaml")


def invoke(*args):
    return CliRunner().invoke(cli, [str(a) for a in args])


def invoke_json(*args):
    result = invoke(*args, "--format", "json")
    return result, json.loads(result.output)


class TestCLIBasics:
    """Test basic CLI functionality."""

    def test_cli_help(self):
        """Test CLI help command."""
        result = invoke("--help")
        assert result.exit_code == 0
        for command in ("check-atomic", "project", "lattice", "factor", "extend",
                        "fragments", "metric", "bound", "validate", "verify-all"):
            assert command in result.output

    def test_cli_version(self):
        """Test CLI version command."""
        result = invoke("--version")
        assert result.exit_code == 0
        assert "0.1.0" in result.output

    def test_missing_workspace_is_usage_error(self, temp_dir):
        """Test that a missing workspace file is a usage error."""
        result = invoke("check-atomic", "-w", temp_dir / "absent.yaml", "--op", "T", "--hom", "id")
        assert result.exit_code == EXIT_INPUT_ERROR


class TestCheckAtomicCommand:
    """Test the 'oa check-atomic' command."""

    def test_atomic(self):
        """Test an atomic operator."""
        result = invoke("check-atomic", "-w", Z4, "--op", "T", "--hom", "shift1")
        assert result.exit_code == EXIT_OK
        assert "PASS" in result.output

    def test_not_atomic_prints_witness(self):
        """Test that a failing check prints its witness."""
        result = invoke("check-atomic", "-w", Z4, "--op", "T", "--hom", "id")
        assert result.exit_code == EXIT_FAILURE
        assert "witness:" in result.output

    def test_full_mode(self):
        """Test full mode output."""
        result, data = invoke_json("check-atomic", "-w", Z4, "--op", "T", "--hom", "shift1", "--mode", "full")
        assert result.exit_code == EXIT_OK
        assert data["data"]["mode"] == "full"

    def test_unresolved_reference(self):
        """Test an unknown operator name."""
        result = invoke("check-atomic", "-w", Z4, "--op", "Nope", "--hom", "id")
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "Unresolved reference" in result.output

    def test_full_cap_is_input_error(self):
        """Test that exceeding the full-mode cap is an input error."""
        result = invoke("check-atomic", "-w", Z4, "--op", "T", "--hom", "id", "--mode", "full",
                        "--full-cap", "2")
        assert result.exit_code == EXIT_INPUT_ERROR


class TestLatticeCommand:
    """Test the 'oa lattice' command."""

    def test_oracle_join_without_common_hom(self):
        """Test the oracle join when no common homomorphism exists."""
        result, data = invoke_json("lattice", "-w", PAIR, "--kind", "join", "--op", "T", "--op2", "S",
                                   "--at", "ones", "--oracle")
        assert result.exit_code == EXIT_OK
        assert data["data"]["oracle"] == ["2"]
        assert data["data"]["pointwise"].startswith("not applicable")

    def test_oracle_meet_inline_element(self):
        """Test the oracle meet at an inline element."""
        result, data = invoke_json("lattice", "-w", PAIR, "--kind", "meet", "--op", "T", "--op2", "S",
                                   "--at", "[1, 1]", "--oracle")
        assert result.exit_code == EXIT_OK
        assert data["data"]["oracle"] == ["0"]

    def test_join_without_oracle_fails(self):
        """Test that a join without a common homomorphism asks for --oracle."""
        result = invoke("lattice", "-w", PAIR, "--kind", "join", "--op", "T", "--op2", "S", "--at", "ones")
        assert result.exit_code == EXIT_FAILURE
        assert "--oracle" in result.output

    def test_pointwise_agrees_with_oracle(self):
        """Test pointwise and oracle values side by side."""
        result, data = invoke_json("lattice", "-w", Z4, "--kind", "mod", "--op", "T", "--at", "x", "--oracle")
        assert result.exit_code == EXIT_OK
        assert data["data"]["pointwise"] == data["data"]["oracle"]
        assert data["data"]["decompositions"] == 16

    def test_binary_kind_needs_second_operator(self):
        """Test that join needs a second operator."""
        result = invoke("lattice", "-w", Z4, "--kind", "join", "--op", "T", "--at", "x")
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_yaml_output_is_deterministic(self):
        """Test that YAML output is stable across runs."""
        args = ("lattice", "-w", Z4, "--kind", "join", "--op", "T", "--op2", "L", "--at", "x",
                "--oracle", "--format", "yaml")
        first, second = invoke(*args), invoke(*args)
        assert first.exit_code == EXIT_OK
        assert first.output == second.output
        assert yaml.safe_load(first.output)["command"] == "lattice"


class TestOtherCommands:
    """Test project, factor, extend, fragments, metric and bound."""

    def test_project_with_partitions(self):
        """Test band projection with partition verification."""
        result, data = invoke_json("project", "-w", SQUARE, "--op", "T", "--hom", "id", "--verify-partitions")
        assert result.exit_code == EXIT_OK
        assert data["data"]["projection"] == {"a": {"a": "pow(r, 2)"}, "b": {"b": "pow(r, 2)"}}
        assert data["data"]["partitions"] == 2

    def test_project_partition_cap(self):
        """Test the partition cap flag."""
        result = invoke("project", "-w", SQUARE, "--op", "T", "--hom", "id", "--verify-partitions",
                        "--partition-cap", "1")
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_factor(self):
        """Test factorisation output."""
        result, data = invoke_json("factor", "-w", Z4, "--op", "T", "--hom", "shift1")
        assert result.exit_code == EXIT_OK
        assert data["data"]["kernel"] == {"0": "r", "1": "pow(r, 2)", "2": "abs(r)", "3": "max(r, 0)"}

    def test_factor_not_atomic(self):
        """Test factorisation of a non-atomic operator."""
        result = invoke("factor", "-w", Z4, "--op", "T", "--hom", "id")
        assert result.exit_code == EXIT_FAILURE

    @pytest.mark.parametrize("ideal,at,value", [
        ("fragments_of_u", "[1, 5]", "3"),
        ("fragments_of_u", "[2, 5]", "0"),
        ("generated_by_u", "[2, 5]", "6"),
        ("kernel_of_K", "[-1, 4]", "3"),
        ("empty", "[1, 1]", "0"),
    ])
    def test_extend(self, ideal, at, value):
        """Test minimal extension for each bundled ideal."""
        result, data = invoke_json("extend", "-w", EXTENSION, "--map", "T", "--ideal", ideal, "--at", at)
        assert result.exit_code == EXIT_OK
        assert data["data"]["value"] == [value]

    def test_fragments_inline(self):
        """Test fragments of an inline element."""
        result, data = invoke_json("fragments", "-w", Z4, "--element", "[1, 0, 2, 0]", "--space", "Z4")
        assert result.exit_code == EXIT_OK
        assert data["data"]["fragment_count"] == 4
        assert sorted(data["data"]["fragments"]) == ["{0,2}", "{0}", "{2}", "{}"]

    def test_metric(self):
        """Test the metric between equal elements."""
        result, data = invoke_json("metric", "-w", Z4, "--f", "x", "--g", "x", "--delta", "1/2")
        assert result.exit_code == EXIT_OK
        assert data["data"]["rho"] == "0"
        assert data["data"]["deviation"] == "0"

    def test_bound_witness(self):
        """Test the order-bound witness."""
        result, data = invoke_json("bound", "-w", INVERSE, "--op", "inv", "--box", "box", "--bound", "1000000")
        assert result.exit_code == EXIT_FAILURE
        assert data["witness"]["element"] == ["1/1000"]
        assert data["witness"]["image"] == ["1000000"]

    def test_bound_not_reached(self):
        """Test a bound that no element reaches."""
        result = invoke("bound", "-w", INVERSE, "--op", "linear", "--box", "box", "--bound", "2")
        assert result.exit_code == EXIT_OK


class TestValidateCommand:
    """Test the 'oa validate' command."""

    def test_valid_workspace(self):
        """Test validation of a bundled workspace."""
        result = invoke("validate", Z4)
        assert result.exit_code == EXIT_OK
        assert "valid" in result.output

    def test_invalid_workspace(self, write_workspace, minimal_workspace_data):
        """Test validation of a schema violation."""
        minimal_workspace_data["homs"]["h"] = {"source": "E"}
        result = invoke("validate", write_workspace(minimal_workspace_data), "--format", "json")
        assert result.exit_code == EXIT_INPUT_ERROR
        assert json.loads(result.output)["valid"] is False

    def test_unresolved_reference(self, write_workspace, minimal_workspace_data):
        """Test validation of an unresolved check reference."""
        minimal_workspace_data["checks"][0]["op"] = "Q"
        result = invoke("validate", write_workspace(minimal_workspace_data))
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "unresolved operator 'Q'" in result.output

    def test_non_finite_value(self, write_workspace, minimal_workspace_data):
        """Test that an infinite element value is reported as an input error."""
        minimal_workspace_data["elements"]["x"]["values"] = [1, float("inf"), 0]
        result = invoke("validate", write_workspace(minimal_workspace_data))
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "Expected a finite rational" in result.output


class TestVerifyAllCommand:
    """Test the 'oa verify-all' command."""

    @pytest.fixture
    def config_path(self, temp_dir, small_config):
        path = temp_dir / "oa.yaml"
        small_config.save_to_file(str(path))
        return path

    def test_single_suite(self, config_path):
        """Test running a single suite."""
        result = invoke("verify-all", "-s", "lateral", "-n", "2", "-c", config_path)
        assert result.exit_code == EXIT_OK
        assert "properties passed" in result.output

    def test_workspace_suite(self, config_path):
        """Test the workspace suite over every bundled workspace."""
        args = ["verify-all", "-s", "workspace", "-c", config_path, "--format", "json"]
        for path in sorted(WORKSPACES.glob("*.yaml")):
            args += ["-w", path]
        result = invoke(*args)
        assert result.exit_code == EXIT_OK
        data = json.loads(result.output)
        assert data["passed"]
        assert len(data["suites"]["workspace"]) == 5

    def test_workspace_suite_needs_workspaces(self):
        """Test that the workspace suite needs workspaces."""
        result = invoke("verify-all", "-s", "workspace")
        assert result.exit_code == EXIT_INPUT_ERROR
