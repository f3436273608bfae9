"""
Pytest fixtures for oa-core tests.
"""

import random
import tempfile
from pathlib import Path

import pytest
import yaml
from hypothesis import settings

from oa_core.engine import CalculusConfig, CalculusEngine
from oa_core.lattice import Space
from oa_core.operators import KernelOperator, diagonal_operator
from oa_core.projections import BooleanHom
from oa_core.workspace import load_workspace

WORKSPACES = Path(__file__).resolve().parent.parent / "workspaces"

settings.register_profile("oa", deadline=None, max_examples=100)
settings.load_profile("oa")


@pytest.fixture
def temp_dir():
    """Create a temporary directory for testing."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def small_config():
    """A configuration small enough for quick suite runs."""
    return CalculusConfig().override(sampling__trials=5, sampling__samples=10, sampling__max_points=4,
                                     grid__size=41)


@pytest.fixture
def engine(small_config):
    return CalculusEngine(small_config)


@pytest.fixture
def workspaces_dir():
    return WORKSPACES


@pytest.fixture
def z4():
    return Space.range(4, name="Z4")


@pytest.fixture
def z4_shift(z4):
    """phi(t) = t + 1 mod 4."""
    return BooleanHom.from_mapping(z4, z4, {t: (t + 1) % 4 for t in z4.points}, name="shift1")


@pytest.fixture
def square_operator():
    """(Tx)_a = (Tx)_b = x_a^2 + x_b^2 on two points."""
    space = Space.of(["a", "b"], name="P2")
    table = {s: {t: "pow(r, 2)" for t in ("a", "b")} for s in ("a", "b")}
    return KernelOperator.from_table(space, space, table, name="T")


@pytest.fixture
def coordinate_pair():
    """T(x) = x_1 and S(x) = x_2 from two points to one."""
    source = Space.of(["1", "2"], name="E2")
    target = Space.of(["1"], name="F1")
    T = KernelOperator.from_table(source, target, {"1": {"1": "r"}}, name="T")
    S = KernelOperator.from_table(source, target, {"2": {"1": "r"}}, name="S")
    return T, S


@pytest.fixture
def inverse_square():
    space = Space.of(["s"], name="P1")
    return diagonal_operator(space, "ifzero(r, 0, div(1, pow(r, 2)))", name="inv")


@pytest.fixture
def z4_workspace():
    return load_workspace(WORKSPACES / "z4_shift.yaml")


@pytest.fixture
def write_workspace(temp_dir):
    """Write workspace data to a YAML file and return its path."""
    def write(data, name="ws.yaml"):
        path = temp_dir / name
        with open(path, "w") as f:
            yaml.safe_dump(data, f, sort_keys=False)
        return path
    return write


@pytest.fixture
def minimal_workspace_data():
    return {
        "spaces": {"E": {"points": [1, 2, 3]}},
        "elements": {"x": {"space": "E", "values": [1, "-1/2", 0]}},
        "homs": {"id": {"source": "E", "identity": True}},
        "operators": {"D": {"space": "E", "diagonal": "abs(r)"}},
        "checks": [{"command": "check-atomic", "op": "D", "hom": "id", "expect": "pass"}],
    }

