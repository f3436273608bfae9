"""
Workspace document schema validation.

A workspace is a YAML document with named sections (spaces, elements,
kernels, homs, operators, ideals) plus an optional list of checks. This
module validates the shape only; references are resolved by the loader.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Union

import yaml
from jsonschema import Draft7Validator

RATIONAL = {"type": ["number", "string"]}
POINT = {"type": ["integer", "string"]}
EXPRESSION = {"type": ["string", "integer"]}
ELEMENT_REF = {
    "oneOf": [
        {"type": "string"},
        {"type": "array", "items": RATIONAL},
        {"type": "object", "additionalProperties": RATIONAL},
    ]
}
NAME_PATTERN = "^[A-Za-z_][A-Za-z0-9_.-]*$"

CHECK_COMMANDS = ["check-atomic", "project", "lattice", "factor", "extend", "fragments", "metric", "bound"]


def _named(item_schema: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "type": "object",
        "propertyNames": {"pattern": NAME_PATTERN},
        "additionalProperties": item_schema,
    }


@dataclass
class ValidationResult:
    """Result of schema validation."""
    is_valid: bool
    errors: List[str]
    warnings: List[str]


class WorkspaceSchema:
    """
    Validator for workspace documents.

    Collects every schema violation (not just the first) so that a broken
    document can be fixed in one pass.
    """

    SCHEMA = {
        "type": "object",
        "required": ["spaces"],
        "additionalProperties": False,
        "properties": {
            "description": {"type": "string"},
            "spaces": _named({
                "type": "object",
                "required": ["points"],
                "additionalProperties": False,
                "properties": {
                    "points": {"type": "array", "items": POINT, "minItems": 1},
                    "weight": {"type": "object", "additionalProperties": RATIONAL},
                    "finite_weight": {"type": "object", "additionalProperties": RATIONAL},
                },
            }),
            "elements": _named({
                "type": "object",
                "required": ["space", "values"],
                "additionalProperties": False,
                "properties": {
                    "space": {"type": "string"},
                    "values": {
                        "oneOf": [
                            {"type": "array", "items": RATIONAL},
                            {"type": "object", "additionalProperties": RATIONAL},
                        ]
                    },
                },
            }),
            "kernels": _named({
                "type": "object",
                "required": ["space", "expressions"],
                "additionalProperties": False,
                "properties": {
                    "space": {"type": "string"},
                    "expressions": {"type": "object", "additionalProperties": EXPRESSION},
                },
            }),
            "homs": _named({
                "type": "object",
                "required": ["source"],
                "additionalProperties": False,
                "properties": {
                    "source": {"type": "string"},
                    "target": {"type": "string"},
                    "identity": {"type": "boolean"},
                    "point_map": {"type": "object", "additionalProperties": POINT},
                },
            }),
            "operators": _named({
                "oneOf": [
                    {
                        "type": "object",
                        "required": ["source", "kernel"],
                        "additionalProperties": False,
                        "properties": {
                            "source": {"type": "string"},
                            "target": {"type": "string"},
                            "kernel": {
                                "type": "object",
                                "additionalProperties": {"type": "object", "additionalProperties": EXPRESSION},
                            },
                        },
                    },
                    {
                        "type": "object",
                        "required": ["space", "diagonal"],
                        "additionalProperties": False,
                        "properties": {
                            "space": {"type": "string"},
                            "diagonal": {
                                "oneOf": [EXPRESSION, {"type": "object", "additionalProperties": EXPRESSION}]
                            },
                        },
                    },
                    {
                        "type": "object",
                        "required": ["superposition_of"],
                        "additionalProperties": False,
                        "properties": {
                            "superposition_of": {
                                "type": "object",
                                "required": ["kernel"],
                                "additionalProperties": False,
                                "properties": {"kernel": {"type": "string"}, "hom": {"type": "string"}},
                            },
                        },
                    },
                ]
            }),
            "ideals": _named({
                "type": "object",
                "required": ["space", "kind"],
                "additionalProperties": False,
                "properties": {
                    "space": {"type": "string"},
                    "kind": {"enum": ["order_ideal", "fragment_set", "operator_kernel", "explicit"]},
                    "generators": {"type": "array", "items": ELEMENT_REF},
                    "anchor": ELEMENT_REF,
                    "operator": {"type": "string"},
                    "members": {"type": "array", "items": ELEMENT_REF},
                },
            }),
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["command"],
                    "properties": {
                        "command": {"enum": CHECK_COMMANDS},
                        "expect": {"enum": ["pass", "fail"]},
                        "name": {"type": "string"},
                    },
                },
            },
        },
    }

    # kind -> field that must be present
    IDEAL_FIELDS = {
        "order_ideal": "generators",
        "fragment_set": "anchor",
        "operator_kernel": "operator",
        "explicit": "members",
    }

    def __init__(self):
        self.validator = Draft7Validator(self.SCHEMA)

    def validate_file(self, file_path: Union[str, Path]) -> ValidationResult:
        """
        Validate a workspace file.

        Args:
            file_path: Path to the workspace YAML file

        Returns:
            ValidationResult with validation status and feedback
        """
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        except FileNotFoundError:
            return ValidationResult(False, [f"File not found: {file_path}"], [])
        except yaml.YAMLError as e:
            return ValidationResult(False, [f"YAML parsing error: {str(e)}"], [])
        return self.validate_data(data)

    def validate_data(self, data: Any) -> ValidationResult:
        """
        Validate parsed workspace data.

        Args:
            data: Parsed YAML data

        Returns:
            ValidationResult with validation status and feedback
        """
        if not isinstance(data, dict):
            return ValidationResult(False, ["Workspace must be a mapping of named sections"], [])

        errors = []
        for error in sorted(self.validator.iter_errors(data), key=lambda e: list(map(str, e.absolute_path))):
            location = "/".join(str(p) for p in error.absolute_path) or "<root>"
            errors.append(f"{location}: {error.message}")

        for name, ideal in (data.get("ideals") or {}).items():
            if not isinstance(ideal, dict):
                continue
            required = self.IDEAL_FIELDS.get(ideal.get("kind"))
            if required and required not in ideal:
                errors.append(f"ideals/{name}: a {ideal['kind']} ideal needs '{required}'")

        for name, hom in (data.get("homs") or {}).items():
            if isinstance(hom, dict) and not hom.get("identity") and "point_map" not in hom:
                errors.append(f"homs/{name}: give either 'point_map' or 'identity: true'")

        warnings = []
        if not data.get("checks"):
            warnings.append("Workspace declares no checks")
        return ValidationResult(is_valid=not errors, errors=errors, warnings=warnings)
