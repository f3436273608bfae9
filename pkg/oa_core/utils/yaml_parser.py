"""
YAML document IO.

Reports and configuration files are written with sorted keys and block
style, so equal data always gives equal bytes.
"""

from pathlib import Path
from typing import Any, Dict, Union

import yaml

DUMP_OPTIONS = {"sort_keys": True, "default_flow_style": False, "allow_unicode": True}


class YamlParser:
    """Safe YAML reading and deterministic writing."""

    def parse_file(self, file_path: Union[str, Path]) -> Dict[str, Any]:
        """Parse a YAML file; an empty file gives an empty mapping."""
        with open(file_path, 'r', encoding='utf-8') as f:
            return yaml.safe_load(f) or {}

    def dump_string(self, data: Any) -> str:
        return yaml.safe_dump(data, **DUMP_OPTIONS)

    def dump_file(self, data: Any, file_path: Union[str, Path]) -> None:
        with open(file_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(data, f, **DUMP_OPTIONS)
