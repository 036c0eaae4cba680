"""Verification stages"""

from qbench.stages.base import BaseStage
from qbench.stages.gradient import GradientStage
from qbench.stages.grid_front import GridFrontStage
from qbench.stages.invariants import InvariantStage
from qbench.stages.oracle import OracleStage
from qbench.stages.shape import ShapeStage
from qbench.stages.weights import WeightStage

__all__ = [
    "BaseStage",
    "GradientStage",
    "GridFrontStage",
    "InvariantStage",
    "OracleStage",
    "ShapeStage",
    "WeightStage",
]
