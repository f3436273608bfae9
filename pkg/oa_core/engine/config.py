"""
Configuration management for the operator calculus.
"""

from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple

from ..utils.rationals import format_rational, to_rational
from ..utils.sampling import DEFAULT_EXTRA_POINTS, rational_grid
from ..utils.yaml_parser import YamlParser


@dataclass
class CapsConfig:
    """Enumeration caps; exceeding one is an input error, never an approximation."""
    support_cap: int = 20
    full_mode_cap: int = 6
    partition_cap: int = 6
    product_grid_cap: int = 100000


@dataclass
class GridConfig:
    """The rational sampling grid used for kernel comparisons and positivity."""
    lower: str = "-10"
    upper: str = "10"
    size: int = 201
    extra_points: List[str] = field(default_factory=lambda: list(DEFAULT_EXTRA_POINTS))

    def points(self) -> Tuple[Fraction, ...]:
        return rational_grid(to_rational(self.lower), to_rational(self.upper), self.size,
                             [to_rational(p) for p in self.extra_points])


@dataclass
class SamplingConfig:
    """Random sampling for property checks; a fixed seed keeps reports reproducible."""
    seed: int = 0
    samples: int = 50
    trials: int = 50
    max_numerator: int = 6
    max_denominator: int = 4
    max_points: int = 6


@dataclass
class BoundSearchConfig:
    """Order-bound witness search."""
    resolution: int = 1000


@dataclass
class CalculusConfig:
    """
    Central configuration for calculus operations.
    Consolidates caps, grid, sampling and search settings.
    """
    caps: CapsConfig = field(default_factory=CapsConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    bound_search: BoundSearchConfig = field(default_factory=BoundSearchConfig)
    continuity_tolerance: str = "1"

    _SECTIONS = {
        "caps": CapsConfig,
        "grid": GridConfig,
        "sampling": SamplingConfig,
        "bound_search": BoundSearchConfig,
    }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CalculusConfig':
        config = cls()
        unknown = set(data) - set(cls._SECTIONS) - {"continuity_tolerance"}
        if unknown:
            raise ValueError(f"Unknown configuration sections: {sorted(unknown)}")
        for name, section_cls in cls._SECTIONS.items():
            section_data = data.get(name) or {}
            allowed = {f.name for f in fields(section_cls)}
            bad = set(section_data) - allowed
            if bad:
                raise ValueError(f"Unknown keys in configuration section '{name}': {sorted(bad)}")
            setattr(config, name, section_cls(**section_data))
        if "continuity_tolerance" in data:
            config.continuity_tolerance = str(data["continuity_tolerance"])
        return config

    @classmethod
    def load_from_file(cls, path: str) -> 'CalculusConfig':
        """Load configuration from a YAML file."""
        file_path = Path(path)
        if not file_path.exists():
            # Return default config if file doesn't exist
            return cls()

        return cls.from_dict(YamlParser().parse_file(file_path))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {}
        for name in self._SECTIONS:
            section = getattr(self, name)
            data[name] = {f.name: getattr(section, f.name) for f in fields(section)}
        data["continuity_tolerance"] = self.continuity_tolerance
        return data

    def save_to_file(self, path: str) -> None:
        """Save configuration to a YAML file."""
        YamlParser().dump_file(self.to_dict(), path)

    def override(self, **values: Any) -> 'CalculusConfig':
        """Copy with flag values applied; None leaves a setting unchanged.

        Keys are ``section__field`` (``caps__support_cap``) or a top-level name.
        """
        sections = {name: replace(getattr(self, name)) for name in self._SECTIONS}
        tolerance = self.continuity_tolerance
        for key, value in values.items():
            if value is None:
                continue
            if key == "continuity_tolerance":
                tolerance = format_rational(to_rational(value))
                continue
            section, _, name = key.partition("__")
            if section not in sections or not hasattr(sections[section], name):
                raise ValueError(f"Unknown configuration key {key!r}")
            setattr(sections[section], name, value)
        return CalculusConfig(**sections, continuity_tolerance=tolerance)

    @property
    def tolerance(self) -> Fraction:
        return to_rational(self.continuity_tolerance)
