"""Pytest configuration and fixtures"""

from pathlib import Path

import numpy as np
import pytest

from qbench.core.config import SolverConfig, VerificationConfig
from qbench.problems.classes import ProblemClass
from qbench.problems.generator import sample_instance
from qbench.problems.instance import Instance


@pytest.fixture
def project_root() -> Path:
    """Project root path"""
    return Path(__file__).parent.parent


@pytest.fixture
def config_path(project_root: Path) -> Path:
    """Main configuration file"""
    return project_root / "config" / "config.yaml"


@pytest.fixture
def presets_path(project_root: Path) -> Path:
    """Experiment preset folder"""
    return project_root / "config" / "experiments"


def make_instance(class_name: str, dimension: int = 10, index: int = 0, **kwargs) -> Instance:
    return sample_instance(ProblemClass.from_name(class_name, dimension, **kwargs), index)


def sphere_pair(dimension: int = 2, s: float = 2.0) -> Instance:
    """Hand-built instance: unit spheres around (0, ..., 0) and e_0, a = 1, b = 0"""
    from qbench.problems.classes import Shape

    shape = {2.0: Shape.CONVEX, 1.0: Shape.LINEAR, 0.5: Shape.CONCAVE}[s]
    eye = np.eye(dimension)
    x2 = np.zeros(dimension)
    x2[0] = 1.0
    return Instance(
        problem_class=ProblemClass(1, True, shape, dimension),
        index=0,
        u1=eye,
        u2=eye.copy(),
        d1=np.ones(dimension),
        d2=np.ones(dimension),
        x1_star=np.zeros(dimension),
        x2_star=x2,
        a1=1.0,
        a2=1.0,
        b1=0.0,
        b2=0.0,
        s=s,
        g_weight=0.5,
    )


@pytest.fixture
def sphere() -> Instance:
    """Symmetric sphere pair in two dimensions"""
    return sphere_pair()


@pytest.fixture
def rotated_instance() -> Instance:
    """Instance 3 of 9/C at d = 10"""
    return make_instance("9/C", 10, 3)


@pytest.fixture
def small_solver_config() -> SolverConfig:
    """Short runs for solver tests"""
    return SolverConfig(population_size=8, budget=400, checkpoints=[8, 100, 200, 400])


@pytest.fixture
def fast_verification() -> VerificationConfig:
    """Reduced verification resolution"""
    return VerificationConfig(random_points=10, segment_points=10, grid_size=200, front_samples=401)
