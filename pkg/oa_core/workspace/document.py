"""
Workspace documents: loading and reference resolution.

A workspace names spaces, elements, superposition kernels, homomorphisms,
operators and lateral ideals in one YAML document. Loading validates the
document against the workspace schema, then builds every object in
dependency order and collects all problems before failing.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Union

import yaml

from ..errors import OACoreError, WorkspaceError
from ..lateral import LateralIdeal
from ..lattice import Element, Space
from ..operators import KernelOperator, diagonal_operator
from ..projections import BooleanHom
from ..schemas import WorkspaceSchema
from ..superposition import SuperpositionKernel, compose_superposition
from ..utils.sampling import DEFAULT_GRID
from ..utils.yaml_parser import YamlParser

logger = logging.getLogger(__name__)

SECTIONS = ("spaces", "elements", "kernels", "homs", "operators", "ideals")


def _keys_to_str(mapping: Mapping) -> Dict[str, Any]:
    return {str(k): v for k, v in mapping.items()}


@dataclass
class Workspace:
    """Resolved contents of a workspace document."""
    spaces: Dict[str, Space] = field(default_factory=dict)
    elements: Dict[str, Element] = field(default_factory=dict)
    kernels: Dict[str, SuperpositionKernel] = field(default_factory=dict)
    homs: Dict[str, BooleanHom] = field(default_factory=dict)
    operators: Dict[str, KernelOperator] = field(default_factory=dict)
    ideals: Dict[str, LateralIdeal] = field(default_factory=dict)
    checks: List[Dict[str, Any]] = field(default_factory=list)
    description: str = ""
    source: str = ""

    def _lookup(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            available = ", ".join(sorted(table)) or "none"
            raise WorkspaceError(f"Unresolved reference: no {section[:-1]} named {name!r}",
                                 [f"available {section}: {available}"])
        return table[name]

    def space(self, name: str) -> Space:
        return self._lookup("spaces", name)

    def kernel(self, name: str) -> SuperpositionKernel:
        return self._lookup("kernels", name)

    def hom(self, name: str) -> BooleanHom:
        return self._lookup("homs", name)

    def operator(self, name: str) -> KernelOperator:
        return self._lookup("operators", name)

    def ideal(self, name: str) -> LateralIdeal:
        return self._lookup("ideals", name)

    def element(self, ref: Any, space: Optional[Space] = None) -> Element:
        """An element by name, or inline values on ``space``.

        Inline values may be a list in point order, a point mapping, or
        either written as YAML text (``"[1, 1/2]"``).
        """
        if isinstance(ref, Element):
            return ref
        if isinstance(ref, str) and ref in self.elements:
            x = self.elements[ref]
            if space is not None and x.space != space:
                raise WorkspaceError(f"Element {ref!r} lives on {x.space.label}, expected {space.label}")
            return x
        values = ref
        if isinstance(ref, str):
            try:
                values = yaml.safe_load(ref)
            except yaml.YAMLError:
                values = None
            if not isinstance(values, (list, dict)):
                available = ", ".join(sorted(self.elements)) or "none"
                raise WorkspaceError(f"Unresolved reference: no element named {ref!r}",
                                     [f"available elements: {available}"])
        if space is None:
            raise WorkspaceError(f"Inline element {ref!r} needs a space")
        if isinstance(values, dict):
            values = _keys_to_str(values)
        return space.element(values)


class WorkspaceLoader:
    """Builds a Workspace from parsed document data."""

    def __init__(self, grid: Sequence[Fraction] = DEFAULT_GRID, check_ideals: bool = True):
        self.grid = tuple(grid)
        self.check_ideals = check_ideals
        self.schema = WorkspaceSchema()

    def load(self, data: Dict[str, Any], source: str = "") -> Workspace:
        result = self.schema.validate_data(data)
        if not result.is_valid:
            raise WorkspaceError(f"Workspace {source or '<data>'} failed schema validation", result.errors)
        for warning in result.warnings:
            logger.warning(f"{source or '<data>'}: {warning}")

        ws = Workspace(description=data.get("description", ""), source=source,
                       checks=[dict(c) for c in data.get("checks") or []])
        diagnostics: List[str] = []
        builders: Dict[str, Callable[[Workspace, str, Dict[str, Any]], Any]] = {
            "spaces": self._space,
            "elements": self._element,
            "kernels": self._kernel,
            "homs": self._hom,
            "operators": self._operator,
            "ideals": self._ideal,
        }
        for section in SECTIONS:
            target = getattr(ws, section)
            for name, entry in (data.get(section) or {}).items():
                try:
                    target[name] = builders[section](ws, name, entry)
                except OACoreError as e:
                    diagnostics.append(f"{section}/{name}: {e}")
        diagnostics.extend(self._check_references(ws))
        if diagnostics:
            raise WorkspaceError(f"Workspace {source or '<data>'} could not be resolved", diagnostics)
        logger.info(f"Loaded workspace {source or '<data>'}: "
                    + ", ".join(f"{len(getattr(ws, s))} {s}" for s in SECTIONS))
        return ws

    def _space(self, ws: Workspace, name: str, entry: Dict[str, Any]) -> Space:
        points = [str(p) for p in entry["points"]]
        weight = _keys_to_str(entry["weight"]) if "weight" in entry else None
        finite = _keys_to_str(entry["finite_weight"]) if "finite_weight" in entry else None
        for label, ws_map in (("weight", weight), ("finite_weight", finite)):
            if ws_map is not None and set(ws_map) != set(points):
                raise WorkspaceError(f"{label} must give a value for every point")
        return Space.of(points, weight, finite, name=name)

    def _element(self, ws: Workspace, name: str, entry: Dict[str, Any]) -> Element:
        return ws.element(entry["values"], ws.space(entry["space"]))

    def _kernel(self, ws: Workspace, name: str, entry: Dict[str, Any]) -> SuperpositionKernel:
        expressions = {k: str(v) for k, v in _keys_to_str(entry["expressions"]).items()}
        return SuperpositionKernel.from_mapping(ws.space(entry["space"]), expressions, name=name)

    def _hom(self, ws: Workspace, name: str, entry: Dict[str, Any]) -> BooleanHom:
        source = ws.space(entry["source"])
        if entry.get("identity"):
            if entry.get("target", entry["source"]) != entry["source"]:
                raise WorkspaceError("An identity homomorphism needs target equal to source")
            return BooleanHom.identity(source, name=name)
        target = ws.space(entry.get("target", entry["source"]))
        mapping = {str(t): str(s) for t, s in entry["point_map"].items()}
        return BooleanHom.from_mapping(source, target, mapping, name=name)

    def _operator(self, ws: Workspace, name: str, entry: Dict[str, Any]) -> KernelOperator:
        if "kernel" in entry:
            source = ws.space(entry["source"])
            target = ws.space(entry.get("target", entry["source"]))
            table = {str(s): {str(t): str(e) for t, e in row.items()} for s, row in entry["kernel"].items()}
            return KernelOperator.from_table(source, target, table, name=name)
        if "diagonal" in entry:
            space = ws.space(entry["space"])
            diagonal = entry["diagonal"]
            if isinstance(diagonal, dict):
                diagonal = {k: str(v) for k, v in _keys_to_str(diagonal).items()}
            else:
                diagonal = str(diagonal)
            return diagonal_operator(space, diagonal, name=name)
        ref = entry["superposition_of"]
        N = ws.kernel(ref["kernel"])
        h = ws.hom(ref["hom"]) if "hom" in ref else BooleanHom.identity(N.space)
        op = compose_superposition(N, h)
        return KernelOperator(op.source, op.target, op.entries, name=name)

    def _ideal(self, ws: Workspace, name: str, entry: Dict[str, Any]) -> LateralIdeal:
        space = ws.space(entry["space"])
        kind = entry["kind"]
        if kind == "order_ideal":
            gens = [ws.element(g, space) for g in entry["generators"]]
            return LateralIdeal.order_ideal(space, gens, name=name, check=self.check_ideals)
        if kind == "fragment_set":
            return LateralIdeal.fragment_set(ws.element(entry["anchor"], space), name=name, check=self.check_ideals)
        if kind == "operator_kernel":
            op = ws.operator(entry["operator"])
            return LateralIdeal.operator_kernel(op, name=name, check=self.check_ideals, grid=self.grid)
        members = [ws.element(m, space) for m in entry["members"]]
        return LateralIdeal.explicit(space, members, name=name, check=self.check_ideals)

    def _check_references(self, ws: Workspace) -> List[str]:
        """Named references inside checks must resolve."""
        diagnostics = []
        sections = {"op": "operators", "op2": "operators", "map": "operators",
                    "hom": "homs", "ideal": "ideals", "space": "spaces"}
        for i, check in enumerate(ws.checks):
            for key, section in sections.items():
                ref = check.get(key)
                if ref is not None and ref not in getattr(ws, section):
                    diagnostics.append(f"checks/{i}: unresolved {section[:-1]} {ref!r}")
        return diagnostics


def load_workspace(source: Union[str, Path, Dict[str, Any]], grid: Sequence[Fraction] = DEFAULT_GRID,
                   check_ideals: bool = True) -> Workspace:
    """Load and resolve a workspace from a YAML path or parsed data."""
    loader = WorkspaceLoader(grid, check_ideals)
    if isinstance(source, dict):
        return loader.load(source)
    path = Path(source)
    if not path.exists():
        raise WorkspaceError(f"Workspace file not found: {path}")
    try:
        data = YamlParser().parse_file(path)
    except yaml.YAMLError as e:
        raise WorkspaceError(f"YAML parsing error in {path}", [str(e)]) from e
    return loader.load(data, source=str(path))
